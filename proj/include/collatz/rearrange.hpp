#pragma once

/**
 * @file rearrange.hpp
 * @brief Rearranging composition words into normal form, three ways.
 *
 * Any E/O word equals its normal form E^{se} o O^{so} plus a constant
 * correction C that does not depend on the evaluation point:
 *
 *     word(n) = normal(n) + C.
 *
 * C is computed by three independent routes which must agree exactly:
 *  - direct: word value minus the normal-form closed form;
 *  - commutator sum: a positive combination of commutator constants,
 *    defined for bracketed words (see commutator_sum_applicable), with no
 *    reference to n at all;
 *  - iterative: block swaps driven by the commutator identity, which also
 *    works for arbitrary affine pairs (where C may be negative).
 *
 * For bracketed E/O words evaluated at positive n, 0 < C < word value; when
 * the word value is 1 this pins the normal form into (0,1), giving the
 * ceiling identity and the exponent inequality checked below.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "collatz/affine_map.hpp"
#include "collatz/rational.hpp"
#include "collatz/word.hpp"

namespace collatz {

enum class Verdict { Holds, Fails, NotApplicable };

const char* to_string(Verdict v);  // "holds" / "fails" / "na"

/// True when the commutator-sum formula applies: the word starts and ends
/// with a first-letter block and has at least two second-letter blocks.
bool commutator_sum_applicable(const Word& w);

/// (E^{se} o O^{so})(n) for the word's exponent sums, via the closed form
/// (3^{so}(n+1) - 2^{so}) / 2^{so+se}. Degenerate sums (se or so zero) are
/// fine. Collatz pair only.
Rational normal_form_value(const Word& w, const Rational& n);

/// evaluate_stepwise(word, n) - normal_form_value(word, n). Total for every
/// E/O word; equals the correction constant C.
Rational correction_direct(const Word& w, const Rational& n);

/// C as a sum of scaled commutator constants, computed with no reference to
/// n. Requires commutator_sum_applicable; throws std::invalid_argument
/// naming the failed precondition otherwise. When terms is non-null it
/// receives one (description, value) entry per summand.
Rational correction_commutator_sum(const Word& w,
                                   std::vector<std::pair<std::string, Rational>>* terms = nullptr);

struct RearrangeStep {
    Word state;                 // word after this swap
    Rational delta;             // contribution of this swap to C
    Rational correction_so_far;
};

struct RearrangeResult {
    Word normal_word;  // first^{sum} o second^{sum}
    Rational correction;
    std::vector<RearrangeStep> steps;
};

/// Iteratively swaps adjacent out-of-order block pairs (second-letter block
/// directly left of a first-letter block) using the commutator identity,
/// scaling each constant through the enclosing prefix, until the word is
/// first^{sum} o second^{sum}. Works for any affine pair; for every x,
///     evaluate(word, x) = evaluate(normal_word, x) + correction.
RearrangeResult rearrange_iterative(const Word& w, const MapPair& pair);

struct RearrangementReport {
    Word word;
    Rational n;
    Rational word_value;  // W = evaluate(word, n)
    Rational normal_value;
    Rational correction_direct;
    Rational correction_sum;
    Rational correction_iterative;
    std::vector<std::pair<std::string, Rational>> terms;
    bool bounds_ok = false;  // 0 < C < W, exact
    Verdict ceiling_identity = Verdict::NotApplicable;
    Verdict exponent_inequality = Verdict::NotApplicable;
};

/// Full report for a bracketed E/O word at positive n: all three correction
/// routes (asserted equal), the 0 < C < W bound, and both identity checks.
/// Shape violations and n <= 0 throw std::invalid_argument.
RearrangementReport analyze(const Word& w, const Rational& n);

/// Ceiling identity: applicable when the word is bracketed and its value at
/// n is exactly 1; then holds iff ceil(normal_form_value) == 1.
Verdict check_ceiling_identity(const Word& w, const Rational& n);

/// Exponent inequality: same applicability; holds iff
/// (n+1)/(2^{se}+1) < (2/3)^{so}, exactly.
Verdict check_exponent_inequality(const Word& w, const Rational& n);

}  // namespace collatz
