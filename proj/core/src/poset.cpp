#include "arrlab/poset.hpp"

#include "arrlab/errors.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>

namespace arrlab {

using Id = IntersectionPoset::Id;

IntersectionPoset IntersectionPoset::build(const Arrangement& a, const PosetOptions& options) {
    IntersectionPoset p;
    p.arrangement_ = a;
    p.spaces_.push_back(Subspace(a.dim()));
    p.generators_.emplace_back();
    p.parents_.emplace_back();
    p.level_start_ = {0, 1};
    p.index_.emplace(p.spaces_[0], 0);

    for (std::size_t k = 1;; ++k) {
        Id begin = p.level_start_[k - 1];
        Id end = p.level_start_[k];
        struct Fresh {
            Subspace space;
            std::vector<std::size_t> gens;
            std::vector<Id> parents;
        };
        std::vector<Fresh> fresh;
        std::unordered_map<Subspace, std::size_t, SubspaceHash> local;
        for (Id y = begin; y < end; ++y) {
            const std::vector<std::size_t>& gy = p.generators_[y];
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (std::binary_search(gy.begin(), gy.end(), i))
                    continue;
                auto z = p.spaces_[y].meet(a[i]);
                if (!z)
                    continue;
                auto [it, inserted] = local.emplace(*z, fresh.size());
                if (inserted) {
                    if (p.spaces_.size() + fresh.size() + 1 > options.max_flats)
                        throw BudgetExceeded(fmt::format("intersection poset exceeds {} flats at codimension {} "
                                                         "({} flats built so far)",
                                                         options.max_flats, k, p.spaces_.size() + fresh.size()),
                                             p.spaces_.size() + fresh.size());
                    fresh.push_back(Fresh{std::move(*z), {}, {}});
                }
                std::vector<Id>& par = fresh[it->second].parents;
                if (par.empty() || par.back() != y)
                    par.push_back(y);
            }
        }
        if (fresh.empty())
            break;
        for (Fresh& f : fresh)
            f.gens = containing(a, f.space);
        std::sort(fresh.begin(), fresh.end(), [](const Fresh& l, const Fresh& r) { return l.gens < r.gens; });
        for (Fresh& f : fresh) {
            Id id = static_cast<Id>(p.spaces_.size());
            p.index_.emplace(f.space, id);
            p.spaces_.push_back(std::move(f.space));
            p.generators_.push_back(std::move(f.gens));
            p.parents_.push_back(std::move(f.parents));
        }
        p.level_start_.push_back(static_cast<Id>(p.spaces_.size()));
    }

    p.ids_.resize(p.spaces_.size());
    std::iota(p.ids_.begin(), p.ids_.end(), Id{0});
    p.children_.assign(p.spaces_.size(), {});
    for (Id x = 0; x < p.spaces_.size(); ++x)
        for (Id y : p.parents_[x])
            p.children_[y].push_back(x);
    for (auto& c : p.children_)
        std::sort(c.begin(), c.end());

    p.mobius_.assign(p.spaces_.size(), 0);
    p.mobius_[0] = 1;
    for (Id x = 1; x < p.spaces_.size(); ++x) {
        Int s = 0;
        for (Id y : p.up_set(x))
            if (y != x)
                s = checked_add(s, p.mobius_[y]);
        p.mobius_[x] = -s;
    }
    return p;
}

std::span<const Id> IntersectionPoset::level(std::size_t codim) const {
    if (codim + 1 >= level_start_.size())
        return {};
    return std::span<const Id>(ids_).subspan(level_start_[codim], level_start_[codim + 1] - level_start_[codim]);
}

std::optional<Id> IntersectionPoset::find(const Subspace& s) const {
    auto it = index_.find(s);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Id> IntersectionPoset::up_set(Id x) const {
    std::vector<Id> out{x};
    std::vector<char> seen(spaces_.size(), 0);
    seen[x] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (Id y : parents_[out[i]])
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
    return out;
}

std::vector<Id> IntersectionPoset::down_set(Id x) const {
    std::vector<Id> out{x};
    std::vector<char> seen(spaces_.size(), 0);
    seen[x] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (Id y : children_[out[i]])
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
    return out;
}

Polynomial IntersectionPoset::char_poly() const {
    IntVec c(arrangement_.dim() + 1, 0);
    for (Id x = 0; x < spaces_.size(); ++x)
        c[dim(x)] = checked_add(c[dim(x)], mobius_[x]);
    return Polynomial(std::move(c));
}

Polynomial IntersectionPoset::restriction_char_poly(Id x) const {
    if (x == 0)
        return char_poly();
    std::vector<Id> down = down_set(x);
    std::sort(down.begin(), down.end()); // ids grow with codimension
    std::vector<Int> mu(spaces_.size(), 0);
    std::vector<std::uint32_t> stamp(spaces_.size(), 0);
    std::vector<char> inside(spaces_.size(), 0);
    for (Id y : down)
        inside[y] = 1;
    IntVec c(dim(x) + 1, 0);
    std::vector<Id> queue;
    std::uint32_t round = 0;
    for (Id y : down) {
        Int m = 1;
        if (y != x) {
            ++round;
            queue.assign(1, y);
            stamp[y] = round;
            Int s = 0;
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (Id z : parents_[queue[i]])
                    if (inside[z] && stamp[z] != round) {
                        stamp[z] = round;
                        queue.push_back(z);
                        s = checked_add(s, mu[z]);
                    }
            m = -s;
        }
        mu[y] = m;
        c[dim(y)] = checked_add(c[dim(y)], m);
    }
    return Polynomial(std::move(c));
}

std::optional<Id> IntersectionPoset::pair_meet(std::size_t i, std::size_t j) const {
    std::size_t n = arrangement_.size();
    constexpr Id none = static_cast<Id>(-1);
    if (pair_table_.empty()) {
        pair_table_.assign(n * n, none);
        for (Id w : level(2)) {
            const auto& g = generators_[w];
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = 0; b < g.size(); ++b)
                    if (a != b)
                        pair_table_[g[a] * n + g[b]] = w;
        }
    }
    Id w = pair_table_[i * n + j];
    if (w == none)
        return std::nullopt;
    return w;
}

Polynomial char_poly(const Arrangement& a, const PosetOptions& options) {
    return IntersectionPoset::build(a, options).char_poly();
}

Polynomial char_poly_via_cone(const Arrangement& a, const PosetOptions& options) {
    Polynomial c = char_poly(cone(a), options);
    auto q = c.divide(Polynomial({-1, 1}));
    if (!q)
        throw std::logic_error("chi of a cone is not divisible by t - 1");
    return *q;
}

namespace {

bool is_modular_in(const IntersectionPoset& p, const std::vector<std::size_t>& outer, Id y) {
    const std::vector<std::size_t>& gy = p.generators(y);
    std::vector<std::size_t> rest;
    std::set_difference(outer.begin(), outer.end(), gy.begin(), gy.end(), std::back_inserter(rest));
    for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b) {
            auto w = p.pair_meet(rest[a], rest[b]);
            if (!w)
                return false;
            const std::vector<std::size_t>& gw = p.generators(*w);
            bool hit = std::any_of(gw.begin(), gw.end(),
                                   [&](std::size_t h) { return std::binary_search(gy.begin(), gy.end(), h); });
            if (!hit)
                return false;
        }
    return true;
}

std::vector<Id> candidates_by_size(const IntersectionPoset& p, Id x) {
    std::vector<Id> c = p.parents(x);
    std::stable_sort(c.begin(), c.end(),
                     [&](Id l, Id r) { return p.generators(l).size() > p.generators(r).size(); });
    return c;
}

Id center_of(const IntersectionPoset& p) {
    if (!p.arrangement().is_central())
        throw InputError("modular coatoms need a central arrangement");
    return p.level(p.levels() - 1).front();
}

bool chain_from(const IntersectionPoset& p, Id x, std::vector<Id>& chain, std::vector<char>& dead) {
    if (x == 0)
        return true;
    for (Id y : candidates_by_size(p, x)) {
        if (dead[y] || !is_modular_in(p, p.generators(x), y))
            continue;
        chain.push_back(y);
        if (chain_from(p, y, chain, dead))
            return true;
        chain.pop_back();
        dead[y] = 1;
    }
    return false;
}

} // namespace

std::vector<Id> modular_coatoms(const IntersectionPoset& p) {
    Id center = center_of(p);
    std::vector<Id> out;
    if (center == 0)
        return out;
    for (Id y : candidates_by_size(p, center))
        if (is_modular_in(p, p.generators(center), y))
            out.push_back(y);
    return out;
}

std::optional<ModularChain> supersolvable(const IntersectionPoset& p) {
    Id center = center_of(p);
    std::vector<Id> chain{center};
    std::vector<char> dead(p.size(), 0);
    if (!chain_from(p, center, chain, dead))
        return std::nullopt;
    ModularChain out;
    std::size_t previous = 0;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        if (*it == 0)
            continue;
        const auto& g = p.generators(*it);
        out.localizations.push_back(g);
        out.exponents.push_back(static_cast<Int>(g.size() - previous));
        previous = g.size();
    }
    out.exponents.insert(out.exponents.begin(), p.arrangement().dim() - out.localizations.size(), 0);
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

std::optional<ModularChain> supersolvable(const Arrangement& a, const PosetOptions& options) {
    return supersolvable(IntersectionPoset::build(a, options));
}

} // namespace arrlab
