#pragma once

#include "arrlab/arrangement.hpp"
#include "arrlab/freeness.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace arrlab {

// A crystallographic root system in the standard Bourbaki coordinates. Root coordinates are
// stored as integer numerators over a common denominator (2 for F4 and E6..E8, else 1).
// Positive roots are sorted by height, then by simple-root coefficients; the simple roots come
// first, in Bourbaki order.
struct RootSystem {
    std::string label; // "A3", "G2", ...
    char type = 'A';
    std::size_t rank = 0;
    std::size_t ambient = 0;
    Int denominator = 1;
    std::vector<IntVec> roots;        // positive roots, numerators
    std::vector<IntVec> coefficients; // in the simple-root basis
    std::vector<int> heights;
    // below[i]: roots beta with roots[i] - beta a simple root (the covers of the root poset)
    std::vector<std::vector<std::size_t>> below;
    int coxeter_number = 0;

    std::size_t size() const noexcept { return roots.size(); }
    bool is_simple(std::size_t i) const noexcept { return i < rank; }
    // Weyl exponents, read off as the dual partition of the height distribution.
    Exponents exponents() const;
    // alpha_i = j as a hyperplane of the ambient space.
    Hyperplane hyperplane(std::size_t i, Int j = 0) const;
};

// "A1".."A8", "B2".., "C2".., "D4".., "E6", "E7", "E8", "F4", "G2"; InputError otherwise.
RootSystem build_root_system(std::string_view label);

// Sorted indices into RootSystem::roots, closed downwards under the root order.
using OrderIdeal = std::vector<std::size_t>;

bool is_ideal(const RootSystem& phi, const OrderIdeal& ideal);
// Streams every order ideal once, starting with the empty one. The callback returns false to
// stop early; the return value is the number of ideals visited.
std::size_t enumerate_ideals(const RootSystem& phi, const std::function<bool(const OrderIdeal&)>& visit);
std::vector<OrderIdeal> all_ideals(const RootSystem& phi);

struct IdealArrangement {
    Arrangement arrangement; // central, hyperplanes ordered by height
    MatPartition partition;  // block k holds the roots of height k + 1
};
// InputError if `ideal` is not an order ideal of phi.
IdealArrangement ideal_arrangement(const RootSystem& phi, const OrderIdeal& ideal);
Arrangement weyl_arrangement(const RootSystem& phi);

// Parameters of A^k_l(r): x_1 ... x_k together with x_i - zeta^n x_j, zeta a primitive r-th root
// of unity. Only r = 2 is realizable over Q; larger r is handled through the restriction table.
struct IntermediateType {
    std::size_t k = 0;
    std::size_t l = 2;
    std::size_t r = 2;
};

void validate(const IntermediateType& t);
Exponents intermediate_expected_exponents(const IntermediateType& t);
// Types of A^H as H runs over the hyperplanes, without repetition.
std::vector<IntermediateType> intermediate_restriction_types(const IntermediateType& t);
// Flag-accuracy decided by recursing through restriction types whose exponents are the initial
// segment of exp(A); rank 2 is the base case.
bool intermediate_flag_accurate(const IntermediateType& t);
// The real arrangement A^k_l(2): x_1..x_k and x_i +- x_j.
Arrangement intermediate_arrangement_r2(std::size_t k, std::size_t l);

} // namespace arrlab
