#pragma once

#include "arrlab/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

namespace arrlab {

// The affine hyperplane {x : normal . x = offset} with integer data in canonical form:
// gcd(normal, offset) = 1 and the first nonzero normal entry is positive.
struct Hyperplane {
    IntVec normal;
    Int offset = 0;

    std::size_t dim() const noexcept { return normal.size(); }
    bool is_linear() const noexcept { return offset == 0; }

    friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

Hyperplane normalize(const RatVec& normal, const Rational& offset);
Hyperplane normalize(IntVec normal, Int offset);

// x_i - x_j = c (0-based coordinates), and c . x_i = value.
Hyperplane difference_hyperplane(std::size_t dim, std::size_t i, std::size_t j, Int c);
Hyperplane coordinate_hyperplane(std::size_t dim, std::size_t i, Int value, Int coefficient = 1);

std::string to_string(const Hyperplane& h);

struct HyperplaneHash {
    std::size_t operator()(const Hyperplane& h) const noexcept;
};

std::size_t hash_ints(const IntVec& v, std::size_t seed = 0) noexcept;

} // namespace arrlab
