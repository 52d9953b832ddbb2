#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "core/errors.hpp"

namespace betti {

/// Exact rational number on checked 64-bit parts.
///
/// Invariants: denominator > 0 and gcd(|numerator|, denominator) = 1 at all
/// times. Intermediate products run in 128 bits; a result that does not fit
/// back into 64 bits throws OverflowError.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // intentionally implicit
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_nonnegative() const { return num_ >= 0; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const; // throws on division by zero

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    /// "p/q", or just "p" when q = 1.
    std::string to_string() const;

private:
    static Rational reduce(__int128 num, __int128 den);

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace betti
