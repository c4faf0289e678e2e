#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace arrlab {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int narrow(__int128 v);

Int gcd_of(const IntVec& v);
Int lcm_checked(Int a, Int b);

// Divides v by the gcd of its entries; zero vectors are left alone.
void make_primitive(IntVec& v);

class Rational {
public:
    Rational() = default;
    Rational(Int n) : num_(n) {} // NOLINT: implicit from integers is intended
    Rational(Int n, Int d);

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;

private:
    Int num_ = 0;
    Int den_ = 1;
};

using RatVec = std::vector<Rational>;

} // namespace arrlab
