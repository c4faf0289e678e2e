#pragma once

#include "arrlab/hyperplane.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace arrlab {

// A nonempty affine subspace of Q^n stored as the canonical reduced row echelon form of its
// defining system. Rows are integer, primitive, have a positive pivot, and every pivot column
// is zero outside its own row; the last entry of a row is the right-hand side.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    // nullopt when the system is inconsistent.
    static std::optional<Subspace> solve(std::size_t ambient, const std::vector<Hyperplane>& eqs);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t codim() const noexcept { return rows_.size(); }
    std::size_t dim() const noexcept { return ambient_ - rows_.size(); }
    bool is_whole() const noexcept { return rows_.empty(); }
    const std::vector<IntVec>& rows() const noexcept { return rows_; }

    std::vector<std::size_t> pivots() const;
    // Coordinates that stay free; they parametrize the subspace in increasing order.
    std::vector<std::size_t> parameters() const;

    // Intersection with h, or nullopt if empty. Returns *this unchanged when h contains it.
    std::optional<Subspace> meet(const Hyperplane& h) const;
    std::optional<Subspace> meet(const Subspace& other) const;

    bool inside(const Hyperplane& h) const;
    bool inside(const Subspace& other) const;

    enum class Incidence { Contains, Disjoint, Cuts };
    struct Trace {
        Incidence incidence;
        Hyperplane hyperplane; // meaningful for Cuts only, in parameter coordinates
    };
    // h restricted to this subspace, written in the parameter coordinates.
    Trace trace(const Hyperplane& h) const;

    // Rewrites a hyperplane given in parameter coordinates as one in ambient coordinates.
    Hyperplane lift(const Hyperplane& h) const;
    // Lifts a subspace of the parameter space back to the ambient space.
    Subspace lift(const Subspace& inner) const;

    std::vector<Hyperplane> equations() const;

    friend auto operator<=>(const Subspace&, const Subspace&) = default;

private:
    // Adds one equation; returns false on inconsistency.
    bool add_row(IntVec row);

    std::size_t ambient_ = 0;
    std::vector<IntVec> rows_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const noexcept;
};

} // namespace arrlab
