#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational arithmetic.
 *
 * Every numeric value in this library is a Rational. There is no floating
 * point anywhere in the core: all arithmetic, comparisons and the floor/ceil
 * pair are exact. Values are kept in canonical form at all times:
 *
 *  - denominator > 0 (sign lives in the numerator)
 *  - gcd(|numerator|, denominator) == 1
 *  - zero is 0/1
 *
 * Integers are rationals with denominator 1; there is no separate integer
 * type in any public signature.
 *
 * The bignum layer is GMP (mpq_class), wrapped so the rest of the code only
 * sees this interface.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace collatz {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, integers are rationals
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses the textual literal: optional leading "-", digits, optional
    /// "/" followed by positive digits ("201/2048", "-4", "22"). Input may
    /// be non-canonical ("4/8"); the result never is. Denominator 0 and any
    /// other malformed input throw std::invalid_argument.
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_positive() const { return sgn(q_) > 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws std::domain_error on o == 0

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return mpq_equal(q_.get_mpq_t(), o.q_.get_mpq_t()) != 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const int c = mpq_cmp(q_.get_mpq_t(), o.q_.get_mpq_t());
        return c <=> 0;
    }

    /// Exact k-th power; r^0 == 1 (including 0^0). Negative k on a zero base
    /// throws std::domain_error.
    Rational pow(std::int64_t k) const;

    Rational floor() const;
    Rational ceil() const;

    /// Exact literal, "num" or "num/den"; round-trips through parse().
    std::string str() const;

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

/// (floor(r), ceil(r)); both equal r when r is an integer.
std::pair<Rational, Rational> floor_ceil(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace collatz
