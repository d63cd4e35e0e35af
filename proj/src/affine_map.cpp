#include "collatz/affine_map.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace collatz {

AffineMap::AffineMap(Rational slope, Rational intercept, char label)
    : slope_(std::move(slope)), intercept_(std::move(intercept)), label_(label) {
    if (slope_.is_zero()) {
        throw std::domain_error("affine map with zero slope is not invertible");
    }
}

AffineMap AffineMap::identity(char label) { return AffineMap(Rational(1), Rational(0), label); }

AffineMap AffineMap::even_step() { return AffineMap(Rational(1, 2), Rational(0), 'E'); }

AffineMap AffineMap::odd_step() { return AffineMap(Rational(3, 2), Rational(1, 2), 'O'); }

AffineMap compose(const AffineMap& a, const AffineMap& b) {
    return AffineMap(a.slope() * b.slope(), a.slope() * b.intercept() + a.intercept(), a.label());
}

AffineMap power_closed(const AffineMap& a, std::int64_t w) {
    if (w < 0) {
        throw std::domain_error("negative power of an affine map");
    }
    if (w == 0) return AffineMap::identity(a.label());
    const Rational sw = a.slope().pow(w);
    if (a.slope() == Rational(1)) {
        return AffineMap(sw, a.intercept() * Rational(w), a.label());
    }
    const Rational geometric = (sw - Rational(1)) / (a.slope() - Rational(1));
    return AffineMap(sw, a.intercept() * geometric, a.label());
}

Rational commutator_constant(const AffineMap& a, const AffineMap& b) {
    // a(b(x)) - b(a(x)): the x coefficients are both slope(a)*slope(b).
    return a.slope() * b.intercept() + a.intercept() - b.slope() * a.intercept() - b.intercept();
}

Rational translate_response(const AffineMap& a, std::int64_t w, const Rational& h) {
    return a.slope().pow(w) * h;
}

MapPair::MapPair(AffineMap first_map, AffineMap second_map)
    : first(std::move(first_map)), second(std::move(second_map)) {
    if (first.label() == second.label()) {
        throw std::invalid_argument("map pair needs distinct labels");
    }
}

MapPair MapPair::collatz() { return MapPair(AffineMap::even_step(), AffineMap::odd_step()); }

std::ostream& operator<<(std::ostream& os, const AffineMap& a) {
    return os << a.label() << ": x -> " << a.slope() << "*x + " << a.intercept();
}

}  // namespace collatz
