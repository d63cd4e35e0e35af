#include "collatz/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace collatz {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    mpq_class q;
    mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(long num, long den) : q_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(make_canonical(num, den)) {}

Rational Rational::parse(std::string_view text) {
    const auto fail = [&](const char* why) {
        throw std::invalid_argument("bad rational literal \"" + std::string(text) + "\": " + why);
    };
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') ++pos;
    const std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) fail("expected digits");
    mpz_class num(std::string(text.substr(0, pos)), 10);
    mpz_class den(1);
    if (pos < text.size()) {
        if (text[pos] != '/') fail("expected '/'");
        ++pos;
        const std::size_t den_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_begin || pos != text.size()) fail("expected positive denominator digits");
        den = mpz_class(std::string(text.substr(den_begin)), 10);
        if (den == 0) fail("denominator is zero");
    }
    return Rational(num, den);
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational Rational::operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }

Rational Rational::operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }

Rational Rational::operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::pow(std::int64_t k) const {
    if (k == 0) return Rational(1);
    if (k < 0 && is_zero()) {
        throw std::domain_error("zero raised to a negative power");
    }
    const auto e = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), e);
    if (k < 0) num.swap(den);
    return Rational(num, den);
}

Rational Rational::floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
    return Rational(f);
}

Rational Rational::ceil() const {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
    return Rational(c);
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::pair<Rational, Rational> floor_ceil(const Rational& r) { return {r.floor(), r.ceil()}; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace collatz
