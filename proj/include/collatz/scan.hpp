#pragma once

/**
 * @file scan.hpp
 * @brief Range scans: one record per start value, CSV emission.
 *
 * scan_range is the OpenMP kernel; scan_range_serial is the plain reference
 * loop it must match record-for-record. Every record depends only on its
 * own n, so the merged output is byte-identical for any worker count.
 */

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "collatz/orbit.hpp"
#include "collatz/rearrange.hpp"

namespace collatz {

struct ScanRecord {
    mpz_class n;
    bool reached_one = false;
    std::int64_t steps = 0;
    Word word;
    std::int64_t second_blocks = 0;  // l
    std::int64_t first_total = 0;    // sigma_e
    std::int64_t second_total = 0;   // sigma_o
    Rational correction;             // C
    Verdict ceiling_identity = Verdict::NotApplicable;
    Verdict exponent_inequality = Verdict::NotApplicable;

    bool operator==(const ScanRecord&) const = default;
};

ScanRecord scan_one(const mpz_class& n, std::int64_t step_cap = kDefaultStepCap);

/// Reference implementation: a straight loop over [lo, hi].
std::vector<ScanRecord> scan_range_serial(std::uint64_t lo, std::uint64_t hi,
                                          std::int64_t step_cap = kDefaultStepCap);

/// OpenMP kernel. jobs <= 0 uses the runtime default thread count. Records
/// come back in ascending n order regardless of the worker count and match
/// scan_range_serial exactly.
std::vector<ScanRecord> scan_range(std::uint64_t lo, std::uint64_t hi,
                                   std::int64_t step_cap = kDefaultStepCap, int jobs = 0);

/// Header: n,reached_one,steps,word,l,sigma_e,sigma_o,C,corollary1,corollary2
std::string csv_header();
std::string csv_row(const ScanRecord& record);
void write_csv(std::ostream& os, const std::vector<ScanRecord>& records);

}  // namespace collatz
