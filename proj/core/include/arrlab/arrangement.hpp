#pragma once

#include "arrlab/hyperplane.hpp"
#include "arrlab/subspace.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace arrlab {

// Ordered, duplicate-free list of hyperplanes in a fixed ambient dimension.
class Arrangement {
public:
    Arrangement() = default;
    explicit Arrangement(std::size_t dim) : dim_(dim) {}
    // Canonicalizes every hyperplane and silently merges repeats (first occurrence wins).
    Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes);

    // Same, but a repeated hyperplane is an InputError naming both indices.
    static Arrangement strict(std::size_t dim, std::vector<Hyperplane> hyperplanes);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return hyperplanes_.size(); }
    bool empty() const noexcept { return hyperplanes_.empty(); }
    bool is_central() const noexcept { return central_; }
    bool merged_duplicates() const noexcept { return merged_; }
    std::size_t rank() const;

    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
    const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
    auto begin() const { return hyperplanes_.begin(); }
    auto end() const { return hyperplanes_.end(); }

    std::optional<std::size_t> index_of(const Hyperplane& h) const;
    bool contains(const Hyperplane& h) const { return index_of(h).has_value(); }

    Arrangement without(std::size_t i) const;
    Arrangement with(const Hyperplane& h) const;
    Arrangement subset(std::span<const std::size_t> indices) const;

    // Same hyperplanes in sorted order; equal arrangements have equal sorted forms.
    Arrangement sorted() const;

    friend bool operator==(const Arrangement& a, const Arrangement& b) {
        return a.dim_ == b.dim_ && a.hyperplanes_ == b.hyperplanes_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Hyperplane> hyperplanes_;
    bool central_ = true;
    bool merged_ = false;
};

// A flat of an arrangement: its subspace plus the indices of all hyperplanes containing it.
struct Flat {
    Subspace space;
    std::vector<std::size_t> generators;

    std::size_t dim() const noexcept { return space.dim(); }
};

// nullopt unless s is a nonempty intersection of hyperplanes of a.
std::optional<Flat> as_flat(const Arrangement& a, const Subspace& s);
// Intersection of the listed hyperplanes; nullopt if empty.
std::optional<Flat> meet(const Arrangement& a, std::span<const std::size_t> indices);
std::vector<std::size_t> containing(const Arrangement& a, const Subspace& s);

Arrangement cone(const Arrangement& a);
Arrangement restrict(const Arrangement& a, const Subspace& x);
Arrangement restrict(const Arrangement& a, std::size_t hyperplane);
Arrangement localize(const Arrangement& a, const Subspace& x);
Arrangement essentialize(const Arrangement& a);
Arrangement product(const Arrangement& a, const Arrangement& b);

// The arrangement as a sorted list after essentialization; used as a memo key.
std::string canonical_key(const Arrangement& a);

std::string to_string(const Arrangement& a);

} // namespace arrlab
