#include "collatz/orbit.hpp"

#include <algorithm>
#include <stdexcept>

namespace collatz {

mpz_class collatz_step(const mpz_class& n) {
    if (n < 1) {
        throw std::domain_error("collatz step needs n >= 1");
    }
    if (mpz_even_p(n.get_mpz_t())) {
        return n / 2;
    }
    return (3 * n + 1) / 2;
}

OrbitTrace trace_orbit(const mpz_class& start, std::int64_t step_cap) {
    if (start < 1) {
        throw std::domain_error("orbit start must be >= 1");
    }
    if (step_cap < 1) {
        throw std::invalid_argument("step cap must be >= 1");
    }

    OrbitTrace trace;
    trace.start = start;
    trace.step_cap = step_cap;
    trace.values.push_back(start);

    std::vector<Block> letters;  // application order, merged as we go
    mpz_class n = start;
    while (n != 1 && trace.steps < step_cap) {
        const Letter letter = mpz_even_p(n.get_mpz_t()) ? Letter::First : Letter::Second;
        if (!letters.empty() && letters.back().letter == letter) {
            ++letters.back().exponent;
        } else {
            letters.push_back({letter, 1});
        }
        n = collatz_step(n);
        trace.values.push_back(n);
        ++trace.steps;
    }

    trace.reached_one = (n == 1);
    std::reverse(letters.begin(), letters.end());  // composition order
    trace.word = Word::normalized(std::move(letters));
    return trace;
}

}  // namespace collatz
