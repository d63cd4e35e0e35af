#include "collatz/rearrange.hpp"

#include <stdexcept>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace collatz;
namespace ct = collatz::testing;

namespace {

const char* kWord22 = "E^3 O^1 E^2 O^1 E^1 O^2 E^1";

Word parse_eo(const char* text) { return Word::parse(text, MapPair::collatz()); }

}  // namespace

TEST_CASE("normal form closed value against the stepwise oracle") {
    const MapPair pair = MapPair::collatz();
    const Word w22 = parse_eo(kWord22);

    // sigma_e = 7, sigma_o = 4: oracle is the literal word E^7 O^4.
    CHECK(normal_form_value(w22, Rational(22)) ==
          evaluate_stepwise(parse_eo("E^7 O^4"), pair, Rational(22)));
    CHECK(normal_form_value(w22, Rational(22)) == Rational(1847, 2048));

    CHECK(normal_form_value(parse_eo("E^1"), Rational(2)) == Rational(1));
    CHECK(normal_form_value(parse_eo("O^2"), Rational(1)) == Rational(7, 2));
    CHECK(normal_form_value(Word(), Rational(9)) == Rational(9));

    ct::Rng rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        const Word w = ct::random_word(rng);
        const Rational n = ct::random_positive_rational(rng);
        std::vector<Block> normal{{Letter::First, w.exponent_sum(Letter::First)},
                                  {Letter::Second, w.exponent_sum(Letter::Second)}};
        CHECK(normal_form_value(w, n) ==
              evaluate_stepwise(Word::normalized(normal), pair, n));
    }
}

TEST_CASE("direct correction") {
    CHECK(correction_direct(parse_eo(kWord22), Rational(22)) == Rational(201, 2048));
    CHECK(correction_direct(parse_eo("E^5"), Rational(7)) == Rational(0));
    CHECK(correction_direct(parse_eo("E^5"), Rational(-3, 7)) == Rational(0));
    // Orbit word of 6 at 6: 1 - 59/64.
    CHECK(correction_direct(parse_eo("E^3 O^2 E^1"), Rational(6)) == Rational(5, 64));
}

TEST_CASE("correction does not depend on n") {
    ct::Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const Word w = ct::random_word(rng);
        const Rational n1 = ct::random_positive_rational(rng);
        const Rational n2 = ct::random_rational(rng);
        CHECK(correction_direct(w, n1) == correction_direct(w, n2));
    }
}

TEST_CASE("commutator-sum correction on the n = 22 word") {
    std::vector<std::pair<std::string, Rational>> terms;
    const Rational c = correction_commutator_sum(parse_eo(kWord22), &terms);
    CHECK(c == Rational(201, 2048));
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].second == Rational(65, 2048));
    CHECK(terms[1].second == Rational(7, 128));
    CHECK(terms[2].second == Rational(3, 256));
    CHECK(terms[0].second + terms[1].second + terms[2].second == c);
    CHECK(c == correction_direct(parse_eo(kWord22), Rational(22)));
}

TEST_CASE("commutator-sum correction on E^1 O^1 E^1 O^1 E^1") {
    const Word w = parse_eo("E^1 O^1 E^1 O^1 E^1");
    // Both commutators via the closed form of the power maps.
    const AffineMap e = AffineMap::even_step();
    const AffineMap o = AffineMap::odd_step();
    const Rational expected =
        Rational(1, 2).pow(2) * commutator_constant(power_closed(o, 2), e) +
        Rational(1, 2) * commutator_constant(o, e);
    CHECK(correction_commutator_sum(w) == expected);
    CHECK(correction_commutator_sum(w) == Rational(9, 32));
    CHECK(correction_commutator_sum(w) == correction_direct(w, Rational(10)));
    CHECK(correction_commutator_sum(w) == correction_direct(w, Rational(5, 3)));
}

TEST_CASE("commutator-sum shape preconditions") {
    CHECK_THROWS_WITH_AS(correction_commutator_sum(parse_eo("E^3 O^2 E^1")),
                         "commutator sum needs at least two second-letter blocks",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(correction_commutator_sum(parse_eo("O^1 E^2 O^1 E^1")),
                         "commutator sum needs a word starting with a first-letter block",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(correction_commutator_sum(parse_eo("E^1 O^1 E^2 O^1")),
                         "commutator sum needs a word ending with a first-letter block",
                         std::invalid_argument);
    CHECK(commutator_sum_applicable(parse_eo(kWord22)));
    CHECK_FALSE(commutator_sum_applicable(parse_eo("E^7")));
    CHECK_FALSE(commutator_sum_applicable(Word()));
}

TEST_CASE("iterative rearrangement of the n = 22 word") {
    const MapPair pair = MapPair::collatz();
    const RearrangeResult result = rearrange_iterative(parse_eo(kWord22), pair);
    CHECK(result.normal_word == parse_eo("E^7 O^4"));
    CHECK(result.correction == Rational(201, 2048));
    // One block move per second-letter block.
    CHECK(result.steps.size() == 3);
    CHECK(result.steps.back().correction_so_far == result.correction);
    CHECK(result.steps.back().state == result.normal_word);
}

TEST_CASE("iterative rearrangement of a generic pair") {
    const MapPair pair(AffineMap(Rational(2), Rational(3), 'A'),
                       AffineMap(Rational(1, 3), Rational(0), 'B'));
    const Word w = Word::parse("A^1 B^1 A^1 B^1", pair);
    const RearrangeResult result = rearrange_iterative(w, pair);
    CHECK(result.normal_word == Word::parse("A^2 B^2", pair));
    CHECK(result.correction == Rational(-4));
    CHECK(result.steps.size() == 1);

    // Algebra oracle: A o B o A o B = 4n/9 + 5, A^2 o B^2 = 4n/9 + 9.
    const AffineMap folded = fold_closed(w, pair);
    CHECK(folded.slope() == Rational(4, 9));
    CHECK(folded.intercept() == Rational(5));
    const AffineMap normal = fold_closed(result.normal_word, pair);
    CHECK(normal.intercept() == Rational(9));
}

TEST_CASE("iterative rearrangement leaves single-letter words alone") {
    const MapPair generic(AffineMap(Rational(5, 2), Rational(1), 'Q'),
                          AffineMap(Rational(1, 7), Rational(2), 'R'));
    const Word w = Word::parse("Q^3", generic);
    const RearrangeResult result = rearrange_iterative(w, generic);
    CHECK(result.normal_word == w);
    CHECK(result.correction == Rational(0));
    CHECK(result.steps.empty());

    const RearrangeResult empty = rearrange_iterative(Word(), generic);
    CHECK(empty.normal_word == Word());
    CHECK(empty.correction == Rational(0));
}

TEST_CASE("three correction routes agree on random bracketed words") {
    ct::Rng rng(424242);
    const MapPair pair = MapPair::collatz();
    for (int trial = 0; trial < 500; ++trial) {
        const Word w = ct::random_bracketed_word(rng);
        const Rational n = ct::random_positive_rational(rng);
        const Rational direct = correction_direct(w, n);
        CHECK(direct == correction_commutator_sum(w));
        const RearrangeResult iterative = rearrange_iterative(w, pair);
        CHECK(direct == iterative.correction);
        CHECK(iterative.steps.size() ==
              static_cast<std::size_t>(w.block_count(Letter::Second)));
        // The bound: 0 < C < W.
        const Rational word_value = evaluate_stepwise(w, pair, n);
        CHECK(Rational(0) < direct);
        CHECK(direct < word_value);
    }
}

TEST_CASE("generic rearrangement satisfies word = normal + C everywhere") {
    ct::Rng rng(987);
    for (int trial = 0; trial < 100; ++trial) {
        const MapPair pair = ct::random_pair(rng);
        const Word w = ct::random_word(rng, 10, 4);
        const RearrangeResult result = rearrange_iterative(w, pair);
        CHECK(result.normal_word.block_count(Letter::First) <= 1);
        CHECK(result.normal_word.block_count(Letter::Second) <= 1);
        CHECK_FALSE((result.normal_word.starts_with(Letter::Second) &&
                     result.normal_word.ends_with(Letter::First)));
        for (int s = 0; s < 3; ++s) {
            const Rational x = ct::random_rational(rng);
            CHECK(evaluate_stepwise(w, pair, x) ==
                  evaluate_stepwise(result.normal_word, pair, x) + result.correction);
        }
    }
}

TEST_CASE("full report for the n = 22 word") {
    const Word w = parse_eo(kWord22);
    const RearrangementReport report = analyze(w, Rational(22));

    CHECK(report.word_value == Rational(1));
    CHECK(report.normal_value == Rational(1847, 2048));
    CHECK(report.correction_direct == Rational(201, 2048));
    CHECK(report.correction_sum == report.correction_direct);
    CHECK(report.correction_iterative == report.correction_direct);
    CHECK(report.word_value == report.normal_value + report.correction_direct);
    CHECK(report.bounds_ok);
    CHECK(report.ceiling_identity == Verdict::Holds);
    CHECK(report.exponent_inequality == Verdict::Holds);
    REQUIRE(report.terms.size() == 3);

    // Theorem statement allows any positive rational evaluation point.
    const RearrangementReport third = analyze(w, Rational(1, 3));
    CHECK(third.bounds_ok);
    CHECK(third.correction_direct == Rational(201, 2048));
    CHECK(third.word_value == evaluate_stepwise(w, MapPair::collatz(), Rational(1, 3)));

    CHECK_THROWS_AS(analyze(parse_eo("E^3 O^2 E^1"), Rational(6)), std::invalid_argument);
    CHECK_THROWS_AS(analyze(w, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(analyze(w, Rational(-22)), std::invalid_argument);
}

TEST_CASE("ceiling identity verdicts") {
    const Word w22 = parse_eo(kWord22);
    CHECK(check_ceiling_identity(w22, Rational(22)) == Verdict::Holds);
    // l = 1: outside the applicable shape.
    CHECK(check_ceiling_identity(parse_eo("E^3 O^2 E^1"), Rational(6)) ==
          Verdict::NotApplicable);
    // Word value differs from 1.
    CHECK(check_ceiling_identity(w22, Rational(24)) == Verdict::NotApplicable);
}

TEST_CASE("exponent inequality verdicts") {
    const Word w22 = parse_eo(kWord22);
    // 23/129 < 16/81 by cross multiplication: 23*81 = 1863 < 2064 = 129*16.
    CHECK(Rational(23, 129) < Rational(16, 81));
    CHECK(check_exponent_inequality(w22, Rational(22)) == Verdict::Holds);
    CHECK(check_exponent_inequality(parse_eo("E^3 O^2 E^1"), Rational(6)) ==
          Verdict::NotApplicable);

    // Orbit word of 14: l = 3, sigma_e = 7, sigma_o = 5; 15/129 < 32/243.
    const Word w14 = parse_eo("E^3 O^1 E^2 O^1 E^1 O^3 E^1");
    CHECK(evaluate_stepwise(w14, MapPair::collatz(), Rational(14)) == Rational(1));
    CHECK(check_exponent_inequality(w14, Rational(14)) == Verdict::Holds);
}

TEST_CASE("verdict names") {
    CHECK(std::string(to_string(Verdict::Holds)) == "holds");
    CHECK(std::string(to_string(Verdict::Fails)) == "fails");
    CHECK(std::string(to_string(Verdict::NotApplicable)) == "na");
}
