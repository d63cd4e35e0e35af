#pragma once

/**
 * @file affine_map.hpp
 * @brief Invertible affine maps x -> slope*x + intercept over rationals.
 *
 * The two Collatz sub-maps live here: the even step E(x) = x/2 and the odd
 * step O(x) = (3x+1)/2. Generic pairs (any nonzero slope) are supported for
 * the iterative rearrangement procedure.
 *
 * Two facts carry the whole library:
 *  - powers have a closed form (geometric series on the intercept), and
 *  - the commutator A(B(x)) - B(A(x)) of two affine maps is a constant,
 *    because the x terms share the slope product and cancel.
 */

#include <cstdint>
#include <iosfwd>

#include "collatz/rational.hpp"

namespace collatz {

class AffineMap {
public:
    /// slope must be nonzero. label is display metadata only and never
    /// participates in arithmetic or equality.
    AffineMap(Rational slope, Rational intercept, char label);

    static AffineMap identity(char label = 'I');
    /// E(x) = x/2
    static AffineMap even_step();
    /// O(x) = (3x+1)/2
    static AffineMap odd_step();

    const Rational& slope() const { return slope_; }
    const Rational& intercept() const { return intercept_; }
    char label() const { return label_; }

    Rational operator()(const Rational& x) const { return slope_ * x + intercept_; }

    /// Structural equality on slope and intercept; the label is ignored.
    bool operator==(const AffineMap& o) const {
        return slope_ == o.slope_ && intercept_ == o.intercept_;
    }

private:
    Rational slope_;
    Rational intercept_;
    char label_;
};

/// a after b: (a o b)(x) = a(b(x)).
AffineMap compose(const AffineMap& a, const AffineMap& b);

/// a^w as a single map, w >= 0. Closed form, not repeated composition:
/// slope s^w with intercept t*(s^w - 1)/(s - 1), or t*w when s == 1.
AffineMap power_closed(const AffineMap& a, std::int64_t w);

/// The constant value of a(b(x)) - b(a(x)). Exact and x-free for any two
/// affine maps, since their slopes commute.
Rational commutator_constant(const AffineMap& a, const AffineMap& b);

/// The shift a^w adds when applied to x + h instead of x: slope(a)^w * h.
Rational translate_response(const AffineMap& a, std::int64_t w, const Rational& h);

/// An ordered pair of maps a two-letter composition word binds to.
/// Labels must be distinct.
struct MapPair {
    MapPair(AffineMap first_map, AffineMap second_map);

    /// (E, O) — the default system.
    static MapPair collatz();

    AffineMap first;
    AffineMap second;
};

std::ostream& operator<<(std::ostream& os, const AffineMap& a);

}  // namespace collatz
