#pragma once

#include "arrlab/arrangement.hpp"
#include "arrlab/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace arrlab {

struct PosetOptions {
    std::size_t max_flats = 5'000'000;
};

// Intersection semilattice L(A) ordered by reverse inclusion. Flat 0 is the ambient space;
// flats are grouped by codimension and sorted by generator sets inside each level, so the
// hyperplane with index i is flat i + 1.
class IntersectionPoset {
public:
    using Id = std::uint32_t;

    static IntersectionPoset build(const Arrangement& a, const PosetOptions& options = {});

    const Arrangement& arrangement() const noexcept { return arrangement_; }
    std::size_t size() const noexcept { return spaces_.size(); }
    std::size_t levels() const noexcept { return level_start_.size() - 1; }
    std::span<const Id> level(std::size_t codim) const;

    const Subspace& space(Id x) const { return spaces_[x]; }
    const std::vector<std::size_t>& generators(Id x) const { return generators_[x]; }
    std::size_t codim(Id x) const { return spaces_[x].codim(); }
    std::size_t dim(Id x) const { return spaces_[x].dim(); }
    Flat flat(Id x) const { return Flat{spaces_[x], generators_[x]}; }

    // Flats one codimension lower that contain x, and one higher contained in x.
    const std::vector<Id>& parents(Id x) const { return parents_[x]; }
    const std::vector<Id>& children(Id x) const { return children_[x]; }

    Int mobius(Id x) const { return mobius_[x]; }
    std::optional<Id> find(const Subspace& s) const;

    // Ids of all flats containing x (x included), and all contained in x.
    std::vector<Id> up_set(Id x) const;
    std::vector<Id> down_set(Id x) const;

    Polynomial char_poly() const;
    // chi of the restriction to x, computed inside the lattice.
    Polynomial restriction_char_poly(Id x) const;

    // Codimension-2 flat through hyperplanes i and j, if they meet.
    std::optional<Id> pair_meet(std::size_t i, std::size_t j) const;

private:
    Arrangement arrangement_;
    std::vector<Subspace> spaces_;
    std::vector<std::vector<std::size_t>> generators_;
    std::vector<std::vector<Id>> parents_;
    std::vector<std::vector<Id>> children_;
    std::vector<Int> mobius_;
    std::vector<Id> level_start_;
    std::vector<Id> ids_;
    std::unordered_map<Subspace, Id, SubspaceHash> index_;
    mutable std::vector<Id> pair_table_;
};

Polynomial char_poly(const Arrangement& a, const PosetOptions& options = {});
// chi(cone(a)) / (t - 1); agrees with char_poly(a) for every a.
Polynomial char_poly_via_cone(const Arrangement& a, const PosetOptions& options = {});

// Central arrangements only.
struct ModularChain {
    // A_{X_1} c ... c A_{X_r} = A as hyperplane index lists (X_0 = V is implicit).
    std::vector<std::vector<std::size_t>> localizations;
    IntVec exponents; // sorted, zeros included
};

std::vector<IntersectionPoset::Id> modular_coatoms(const IntersectionPoset& poset);
std::optional<ModularChain> supersolvable(const IntersectionPoset& poset);
std::optional<ModularChain> supersolvable(const Arrangement& a, const PosetOptions& options = {});

} // namespace arrlab
