#pragma once

/**
 * @file orbit.hpp
 * @brief The accelerated Collatz map over positive integers.
 *
 * One step sends n to n/2 when n is even and to (3n+1)/2 when n is odd —
 * the odd step folds the halving that always follows 3n+1 into the step
 * itself. An orbit runs until it hits 1 or a step cap fires.
 *
 * Each orbit also records its composition word: the parity decisions, as a
 * word over E/O in composition order (the first step taken is the word's
 * rightmost block). Evaluating that word on the start value reproduces the
 * final orbit value exactly.
 */

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "collatz/word.hpp"

namespace collatz {

inline constexpr std::int64_t kDefaultStepCap = 1'000'000;

/// n/2 for even n, (3n+1)/2 for odd n. Requires n >= 1.
mpz_class collatz_step(const mpz_class& n);

struct OrbitTrace {
    mpz_class start;
    std::vector<mpz_class> values;  // start ... 1, or truncated at the cap
    Word word;                      // composition order
    bool reached_one = false;
    std::int64_t steps = 0;
    std::int64_t step_cap = 0;
};

/// Iterates collatz_step from start until the value 1 appears or step_cap
/// steps have been taken. Hitting the cap is not an error; it is reported
/// as reached_one == false. start == 1 yields the empty word. Requires
/// start >= 1 and step_cap >= 1.
OrbitTrace trace_orbit(const mpz_class& start, std::int64_t step_cap = kDefaultStepCap);

}  // namespace collatz
