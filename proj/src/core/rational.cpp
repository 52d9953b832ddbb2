#include "core/rational.hpp"

#include <limits>

namespace betti {

namespace {

using int128 = __int128;

int128 abs128(int128 x) { return x < 0 ? -x : x; }

int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr int128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr int128 kMin64 = std::numeric_limits<std::int64_t>::min();

} // namespace

Rational Rational::reduce(int128 num, int128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) den = 1;
    int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num > kMax64 || num < kMin64 || den > kMax64)
        throw OverflowError("rational value overflows 64 bits");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = reduce(num, den);
}

Rational Rational::operator-() const {
    return reduce(-static_cast<int128>(num_), den_);
}

Rational Rational::operator+(const Rational& o) const {
    return reduce(static_cast<int128>(num_) * o.den_ + static_cast<int128>(o.num_) * den_,
                  static_cast<int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return reduce(static_cast<int128>(num_) * o.den_ - static_cast<int128>(o.num_) * den_,
                  static_cast<int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return reduce(static_cast<int128>(num_) * o.num_, static_cast<int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
    return reduce(static_cast<int128>(num_) * o.den_, static_cast<int128>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    int128 lhs = static_cast<int128>(num_) * o.den_;
    int128 rhs = static_cast<int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

} // namespace betti
