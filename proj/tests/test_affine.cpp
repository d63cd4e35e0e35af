#include "collatz/affine_map.hpp"

#include <stdexcept>

#include "collatz/word.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace collatz;
namespace ct = collatz::testing;

namespace {

// Repeated-composition oracle for power_closed.
AffineMap power_oracle(const AffineMap& a, std::int64_t w) {
    AffineMap acc = AffineMap::identity(a.label());
    for (std::int64_t i = 0; i < w; ++i) acc = compose(acc, a);
    return acc;
}

// Sampling oracle: a(b(x)) - b(a(x)) at one point.
Rational commutator_oracle(const AffineMap& a, const AffineMap& b, const Rational& x) {
    return a(b(x)) - b(a(x));
}

}  // namespace

TEST_CASE("the two Collatz sub-maps") {
    const AffineMap e = AffineMap::even_step();
    const AffineMap o = AffineMap::odd_step();
    CHECK(e.slope() == Rational(1, 2));
    CHECK(e.intercept() == Rational(0));
    CHECK(o.slope() == Rational(3, 2));
    CHECK(o.intercept() == Rational(1, 2));
    CHECK(o(Rational(1)) == Rational(2));
    CHECK(e(Rational(8)) == Rational(4));
    CHECK(o(Rational(2)) == Rational(7, 2));
}

TEST_CASE("zero slope rejected") {
    CHECK_THROWS_AS(AffineMap(Rational(0), Rational(1), 'Z'), std::domain_error);
}

TEST_CASE("composition against the two-point oracle") {
    const AffineMap e = AffineMap::even_step();
    const AffineMap o = AffineMap::odd_step();

    const AffineMap oe = compose(o, e);
    CHECK(oe.slope() == Rational(3, 4));
    CHECK(oe.intercept() == Rational(1, 2));
    for (const Rational& x : {Rational(0), Rational(1)}) CHECK(oe(x) == o(e(x)));

    const AffineMap eo = compose(e, o);
    CHECK(eo.slope() == Rational(3, 4));
    CHECK(eo.intercept() == Rational(1, 4));
    for (const Rational& x : {Rational(0), Rational(1)}) CHECK(eo(x) == e(o(x)));

    CHECK(compose(o, AffineMap::identity()) == o);
    CHECK(compose(AffineMap::identity(), o) == o);
}

TEST_CASE("composition is associative") {
    ct::Rng rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const AffineMap a = ct::random_affine(rng, 'A');
        const AffineMap b = ct::random_affine(rng, 'B');
        const AffineMap c = ct::random_affine(rng, 'C');
        CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
    }
}

TEST_CASE("closed-form powers") {
    const AffineMap e = AffineMap::even_step();
    const AffineMap o = AffineMap::odd_step();

    const AffineMap e3 = power_closed(e, 3);
    CHECK(e3.slope() == Rational(1, 8));
    CHECK(e3.intercept() == Rational(0));

    const AffineMap o2 = power_closed(o, 2);
    CHECK(o2 == compose(o, o));
    CHECK(o2 == power_oracle(o, 2));
    CHECK(o2.slope() == Rational(9, 4));
    CHECK(o2.intercept() == Rational(5, 4));

    CHECK(power_closed(o, 0) == AffineMap::identity());
    CHECK_THROWS_AS(power_closed(o, -1), std::domain_error);
}

TEST_CASE("power_closed equals repeated composition up to w = 64") {
    const AffineMap e = AffineMap::even_step();
    const AffineMap o = AffineMap::odd_step();
    ct::Rng rng(271828);
    const AffineMap unit_slope(Rational(1), Rational(2, 3), 'U');
    const AffineMap maps[] = {e, o, unit_slope, ct::random_affine(rng, 'G'),
                              ct::random_affine(rng, 'H')};
    for (const AffineMap& a : maps) {
        AffineMap acc = AffineMap::identity(a.label());
        for (std::int64_t w = 0; w <= 64; ++w) {
            CHECK(power_closed(a, w) == acc);
            acc = compose(acc, a);
        }
    }
}

TEST_CASE("commutator constants") {
    const AffineMap e = AffineMap::even_step();
    const AffineMap o = AffineMap::odd_step();

    CHECK(commutator_constant(o, e) == Rational(1, 4));
    CHECK(commutator_constant(o, e) ==
          commutator_oracle(o, e, Rational(1)));

    CHECK(commutator_constant(power_closed(o, 1), power_closed(e, 3)) == Rational(7, 16));

    const AffineMap a(Rational(2), Rational(3), 'A');
    const AffineMap b(Rational(1, 3), Rational(0), 'B');
    CHECK(commutator_constant(a, b) == Rational(2));
    CHECK(commutator_oracle(a, b, Rational(0)) == Rational(2));
    CHECK(commutator_oracle(a, b, Rational(3)) == Rational(2));
}

TEST_CASE("commutator is independent of the sample point") {
    ct::Rng rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        const AffineMap a = ct::random_affine(rng, 'A');
        const AffineMap b = ct::random_affine(rng, 'B');
        const Rational expected = commutator_constant(a, b);
        for (int s = 0; s < 3; ++s) {
            CHECK(commutator_oracle(a, b, ct::random_rational(rng)) == expected);
        }
    }
}

TEST_CASE("odd/even power commutators are strictly positive") {
    const AffineMap e = AffineMap::even_step();
    const AffineMap o = AffineMap::odd_step();
    for (std::int64_t a = 1; a <= 32; ++a) {
        for (std::int64_t b = 1; b <= 32; ++b) {
            CHECK(commutator_constant(power_closed(o, a), power_closed(e, b)) > Rational(0));
        }
    }
}

TEST_CASE("translation response") {
    const AffineMap e = AffineMap::even_step();
    const AffineMap o = AffineMap::odd_step();

    // Oracle: apply O^2 to x+1 and to x, difference at x = 0.
    const AffineMap o2 = power_closed(o, 2);
    CHECK(translate_response(o, 2, Rational(1)) == o2(Rational(1)) - o2(Rational(0)));
    CHECK(translate_response(o, 2, Rational(1)) == Rational(9, 4));
    CHECK(translate_response(e, 3, Rational(8)) == Rational(1));
    CHECK(translate_response(o, 5, Rational(0)) == Rational(0));
}

TEST_CASE("translation shift propagates through random words") {
    ct::Rng rng(161803);
    const MapPair pair = MapPair::collatz();
    for (int trial = 0; trial < 200; ++trial) {
        const Word g = ct::random_word(rng);
        const Rational n = ct::random_positive_rational(rng);
        const Rational h = ct::random_rational(rng);
        const std::int64_t w = ct::random_in(rng, 1, 8);
        const Rational gn = evaluate_stepwise(g, pair, n);
        for (const AffineMap& a : {pair.first, pair.second}) {
            const AffineMap aw = power_closed(a, w);
            CHECK(aw(gn + h) == aw(gn) + translate_response(a, w, h));
        }
    }
}

TEST_CASE("pair labels must differ") {
    CHECK_THROWS_AS(MapPair(AffineMap::even_step(), AffineMap(Rational(3), Rational(1), 'E')),
                    std::invalid_argument);
}
