#include "arrlab/hyperplane.hpp"

#include "arrlab/errors.hpp"

#include <fmt/format.h>

namespace arrlab {

Hyperplane normalize(IntVec normal, Int offset) {
    std::size_t lead = 0;
    while (lead < normal.size() && normal[lead] == 0)
        ++lead;
    if (lead == normal.size())
        throw InputError("hyperplane with zero normal vector");
    Int g = std::gcd(gcd_of(normal), offset);
    if (normal[lead] < 0)
        g = -g;
    for (Int& x : normal)
        x /= g;
    return Hyperplane{std::move(normal), offset / g};
}

Hyperplane normalize(const RatVec& normal, const Rational& offset) {
    Int scale = offset.den();
    for (const Rational& r : normal)
        scale = lcm_checked(scale, r.den());
    IntVec n;
    n.reserve(normal.size());
    for (const Rational& r : normal)
        n.push_back(checked_mul(r.num(), scale / r.den()));
    return normalize(std::move(n), checked_mul(offset.num(), scale / offset.den()));
}

Hyperplane difference_hyperplane(std::size_t dim, std::size_t i, std::size_t j, Int c) {
    IntVec n(dim, 0);
    n[i] = 1;
    n[j] = -1;
    return normalize(std::move(n), c);
}

Hyperplane coordinate_hyperplane(std::size_t dim, std::size_t i, Int value, Int coefficient) {
    IntVec n(dim, 0);
    n[i] = coefficient;
    return normalize(std::move(n), value);
}

std::string to_string(const Hyperplane& h) {
    std::string out;
    for (std::size_t i = 0; i < h.normal.size(); ++i) {
        Int c = h.normal[i];
        if (c == 0)
            continue;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        Int a = c < 0 ? -c : c;
        if (a != 1)
            out += std::to_string(a);
        out += fmt::format("x{}", i + 1);
    }
    return fmt::format("{} = {}", out, h.offset);
}

std::size_t hash_ints(const IntVec& v, std::size_t seed) noexcept {
    std::size_t h = seed ^ (v.size() * 0x9e3779b97f4a7c15ULL);
    for (Int x : v) {
        h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::size_t HyperplaneHash::operator()(const Hyperplane& h) const noexcept {
    return hash_ints(h.normal, std::hash<Int>{}(h.offset));
}

} // namespace arrlab
