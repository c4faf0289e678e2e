#include "arrlab/arrangement.hpp"

#include "arrlab/errors.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <unordered_map>

namespace arrlab {

namespace {

Hyperplane canonical(const Hyperplane& h, std::size_t dim) {
    if (h.normal.size() != dim)
        throw InputError(fmt::format("hyperplane has {} coordinates, expected {}", h.normal.size(), dim));
    return normalize(h.normal, h.offset);
}

Subspace linear_span_system(const Arrangement& a) {
    std::vector<Hyperplane> linear;
    linear.reserve(a.size());
    for (const Hyperplane& h : a)
        linear.push_back(Hyperplane{h.normal, 0});
    return *Subspace::solve(a.dim(), linear);
}

} // namespace

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes) : dim_(dim) {
    std::unordered_map<Hyperplane, std::size_t, HyperplaneHash> seen;
    hyperplanes_.reserve(hyperplanes.size());
    for (const Hyperplane& raw : hyperplanes) {
        Hyperplane h = canonical(raw, dim);
        if (seen.contains(h)) {
            merged_ = true;
            continue;
        }
        seen.emplace(h, hyperplanes_.size());
        central_ = central_ && h.offset == 0;
        hyperplanes_.push_back(std::move(h));
    }
}

Arrangement Arrangement::strict(std::size_t dim, std::vector<Hyperplane> hyperplanes) {
    std::unordered_map<Hyperplane, std::size_t, HyperplaneHash> seen;
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
        Hyperplane h = canonical(hyperplanes[i], dim);
        auto [it, fresh] = seen.emplace(h, i);
        if (!fresh)
            throw InputError(fmt::format("hyperplanes {} and {} coincide ({})", it->second, i, to_string(h)));
    }
    return Arrangement(dim, std::move(hyperplanes));
}

std::size_t Arrangement::rank() const { return linear_span_system(*this).codim(); }

std::optional<std::size_t> Arrangement::index_of(const Hyperplane& h) const {
    auto it = std::find(hyperplanes_.begin(), hyperplanes_.end(), h);
    if (it == hyperplanes_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - hyperplanes_.begin());
}

Arrangement Arrangement::without(std::size_t i) const {
    std::vector<Hyperplane> hs = hyperplanes_;
    hs.erase(hs.begin() + static_cast<std::ptrdiff_t>(i));
    return Arrangement(dim_, std::move(hs));
}

Arrangement Arrangement::with(const Hyperplane& h) const {
    std::vector<Hyperplane> hs = hyperplanes_;
    hs.push_back(h);
    return Arrangement(dim_, std::move(hs));
}

Arrangement Arrangement::subset(std::span<const std::size_t> indices) const {
    std::vector<Hyperplane> hs;
    hs.reserve(indices.size());
    for (std::size_t i : indices)
        hs.push_back(hyperplanes_.at(i));
    return Arrangement(dim_, std::move(hs));
}

Arrangement Arrangement::sorted() const {
    std::vector<Hyperplane> hs = hyperplanes_;
    std::sort(hs.begin(), hs.end());
    return Arrangement(dim_, std::move(hs));
}

std::vector<std::size_t> containing(const Arrangement& a, const Subspace& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (s.inside(a[i]))
            out.push_back(i);
    return out;
}

std::optional<Flat> as_flat(const Arrangement& a, const Subspace& s) {
    if (s.ambient() != a.dim())
        return std::nullopt;
    std::vector<std::size_t> gens = containing(a, s);
    Subspace x(a.dim());
    for (std::size_t i : gens)
        x = *x.meet(a[i]);
    if (x != s)
        return std::nullopt;
    return Flat{s, std::move(gens)};
}

std::optional<Flat> meet(const Arrangement& a, std::span<const std::size_t> indices) {
    Subspace x(a.dim());
    for (std::size_t i : indices) {
        auto next = x.meet(a.hyperplanes().at(i));
        if (!next)
            return std::nullopt;
        x = std::move(*next);
    }
    std::vector<std::size_t> gens = containing(a, x);
    return Flat{std::move(x), std::move(gens)};
}

Arrangement cone(const Arrangement& a) {
    std::vector<Hyperplane> hs;
    hs.reserve(a.size() + 1);
    for (const Hyperplane& h : a) {
        IntVec n = h.normal;
        n.push_back(-h.offset);
        hs.push_back(normalize(std::move(n), 0));
    }
    IntVec z(a.dim() + 1, 0);
    z.back() = 1;
    hs.push_back(Hyperplane{std::move(z), 0});
    return Arrangement(a.dim() + 1, std::move(hs));
}

Arrangement restrict(const Arrangement& a, const Subspace& x) {
    if (!as_flat(a, x))
        throw InputError("restriction target is not a flat of the arrangement");
    std::vector<Hyperplane> hs;
    for (const Hyperplane& h : a) {
        Subspace::Trace t = x.trace(h);
        if (t.incidence == Subspace::Incidence::Cuts)
            hs.push_back(std::move(t.hyperplane));
    }
    return Arrangement(x.dim(), std::move(hs));
}

Arrangement restrict(const Arrangement& a, std::size_t hyperplane) {
    return restrict(a, *Subspace(a.dim()).meet(a[hyperplane]));
}

Arrangement localize(const Arrangement& a, const Subspace& x) {
    auto flat = as_flat(a, x);
    if (!flat)
        throw InputError("localization target is not a flat of the arrangement");
    return a.subset(flat->generators);
}

Arrangement essentialize(const Arrangement& a) {
    std::vector<std::size_t> piv = linear_span_system(a).pivots();
    std::vector<Hyperplane> hs;
    hs.reserve(a.size());
    for (const Hyperplane& h : a) {
        IntVec n;
        n.reserve(piv.size());
        for (std::size_t p : piv)
            n.push_back(h.normal[p]);
        hs.push_back(normalize(std::move(n), h.offset));
    }
    return Arrangement(piv.size(), std::move(hs));
}

Arrangement product(const Arrangement& a, const Arrangement& b) {
    std::size_t dim = a.dim() + b.dim();
    std::vector<Hyperplane> hs;
    hs.reserve(a.size() + b.size());
    for (const Hyperplane& h : a) {
        IntVec n = h.normal;
        n.resize(dim, 0);
        hs.push_back(Hyperplane{std::move(n), h.offset});
    }
    for (const Hyperplane& h : b) {
        IntVec n(a.dim(), 0);
        n.insert(n.end(), h.normal.begin(), h.normal.end());
        hs.push_back(Hyperplane{std::move(n), h.offset});
    }
    return Arrangement(dim, std::move(hs));
}

std::string canonical_key(const Arrangement& a) {
    Arrangement e = essentialize(a).sorted();
    std::string key = fmt::format("{}|{}:", a.dim(), e.dim());
    for (const Hyperplane& h : e)
        key += fmt::format("{},{};", fmt::join(h.normal, ","), h.offset);
    return key;
}

std::string to_string(const Arrangement& a) {
    std::string out = fmt::format("arrangement in dimension {} with {} hyperplanes\n", a.dim(), a.size());
    for (const Hyperplane& h : a)
        out += "  " + to_string(h) + "\n";
    return out;
}

} // namespace arrlab
