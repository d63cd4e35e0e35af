#include "collatz/scan.hpp"

#include <omp.h>

#include <ostream>
#include <stdexcept>

namespace collatz {

ScanRecord scan_one(const mpz_class& n, std::int64_t step_cap) {
    const OrbitTrace trace = trace_orbit(n, step_cap);

    ScanRecord record;
    record.n = n;
    record.reached_one = trace.reached_one;
    record.steps = trace.steps;
    record.word = trace.word;
    record.second_blocks = trace.word.block_count(Letter::Second);
    record.first_total = trace.word.exponent_sum(Letter::First);
    record.second_total = trace.word.exponent_sum(Letter::Second);

    const Rational value(n);
    const Rational word_value = evaluate_stepwise(trace.word, MapPair::collatz(), value);
    const Rational normal = normal_form_value(trace.word, value);
    record.correction = word_value - normal;

    if (commutator_sum_applicable(trace.word) && word_value == Rational(1)) {
        record.ceiling_identity = normal.ceil() == Rational(1) ? Verdict::Holds : Verdict::Fails;
        const Rational lhs =
            (value + Rational(1)) / (Rational(2).pow(record.first_total) + Rational(1));
        const Rational rhs = Rational(2, 3).pow(record.second_total);
        record.exponent_inequality = lhs < rhs ? Verdict::Holds : Verdict::Fails;
    }
    return record;
}

std::vector<ScanRecord> scan_range_serial(std::uint64_t lo, std::uint64_t hi,
                                          std::int64_t step_cap) {
    if (lo < 1 || lo > hi) {
        throw std::invalid_argument("scan range needs 1 <= lo <= hi");
    }
    std::vector<ScanRecord> records;
    records.reserve(hi - lo + 1);
    for (std::uint64_t n = lo; n <= hi; ++n) {
        records.push_back(scan_one(mpz_class(static_cast<unsigned long>(n)), step_cap));
    }
    return records;
}

std::vector<ScanRecord> scan_range(std::uint64_t lo, std::uint64_t hi, std::int64_t step_cap,
                                   int jobs) {
    if (lo < 1 || lo > hi) {
        throw std::invalid_argument("scan range needs 1 <= lo <= hi");
    }
    const std::int64_t count = static_cast<std::int64_t>(hi - lo + 1);
    std::vector<ScanRecord> records(static_cast<std::size_t>(count));
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();

// Each slot depends only on its own n, so the merged result is identical
// for any thread count.
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
        records[static_cast<std::size_t>(i)] =
            scan_one(mpz_class(static_cast<unsigned long>(lo + static_cast<std::uint64_t>(i))),
                     step_cap);
    }
    return records;
}

std::string csv_header() { return "n,reached_one,steps,word,l,sigma_e,sigma_o,C,corollary1,corollary2"; }

std::string csv_row(const ScanRecord& r) {
    std::string row = r.n.get_str();
    row += ',';
    row += r.reached_one ? '1' : '0';
    row += ',';
    row += std::to_string(r.steps);
    row += ',';
    row += r.word.format(MapPair::collatz());
    row += ',';
    row += std::to_string(r.second_blocks);
    row += ',';
    row += std::to_string(r.first_total);
    row += ',';
    row += std::to_string(r.second_total);
    row += ',';
    row += r.correction.str();
    row += ',';
    row += to_string(r.ceiling_identity);
    row += ',';
    row += to_string(r.exponent_inequality);
    return row;
}

void write_csv(std::ostream& os, const std::vector<ScanRecord>& records) {
    os << csv_header() << '\n';
    for (const ScanRecord& r : records) os << csv_row(r) << '\n';
}

}  // namespace collatz
