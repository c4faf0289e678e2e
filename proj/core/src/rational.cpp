#include "arrlab/rational.hpp"

#include "arrlab/errors.hpp"

#include <limits>

namespace arrlab {

Int narrow(__int128 v) {
    if (v > std::numeric_limits<Int>::max() || v < -std::numeric_limits<Int>::max())
        throw ArithmeticOverflow("integer overflow in exact arithmetic");
    return static_cast<Int>(v);
}

Int checked_add(Int a, Int b) { return narrow(static_cast<__int128>(a) + b); }
Int checked_sub(Int a, Int b) { return narrow(static_cast<__int128>(a) - b); }
Int checked_mul(Int a, Int b) { return narrow(static_cast<__int128>(a) * b); }

Int gcd_of(const IntVec& v) {
    Int g = 0;
    for (Int x : v) {
        g = std::gcd(g, x);
        if (g == 1)
            break;
    }
    return g;
}

Int lcm_checked(Int a, Int b) {
    if (a == 0 || b == 0)
        return 0;
    Int g = std::gcd(a, b);
    return checked_mul(a / g, b < 0 ? -b : b);
}

void make_primitive(IntVec& v) {
    Int g = gcd_of(v);
    if (g > 1)
        for (Int& x : v)
            x /= g;
}

Rational::Rational(Int n, Int d) {
    if (d == 0)
        throw std::domain_error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Int g = std::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
    Int g = std::gcd(a.den_, b.den_);
    __int128 n = static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g);
    __int128 d = static_cast<__int128>(a.den_ / g) * b.den_;
    __int128 h = n;
    if (h < 0)
        h = -h;
    // reduce in 128 bits before narrowing
    __int128 x = h, y = d;
    while (y != 0) {
        __int128 t = x % y;
        x = y;
        y = t;
    }
    if (x > 1) {
        n /= x;
        d /= x;
    }
    return Rational(narrow(n), narrow(d));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = std::gcd(a.num_, b.den_);
    Int g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0)
        g1 = 1;
    if (g2 == 0)
        g2 = 1;
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0)
        throw std::domain_error("division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
}

std::string Rational::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace arrlab
