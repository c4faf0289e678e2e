#pragma once

#include "arrlab/accuracy.hpp"
#include "arrlab/deformations.hpp"
#include "arrlab/graphs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrlab {

enum class Genealogy { Shi, Catalan };
std::string_view genealogy_name(Genealogy g);
std::optional<Genealogy> genealogy_from_name(std::string_view name);

// One cell of a descendant matrix. Vertices are 1..l in the text and 0..l-1 here.
//   Shi      A^{p,k}_l(m, d)     1 <= k <= l, m, d >= 0
//   Catalan  R^{p,k}_l(c, m)     1 <= k <= l, c >= 1, m >= 0
//            hat R^{p,k}_l(c, m) 1 <= k <= l-1
struct DescendantSpec {
    Genealogy genealogy = Genealogy::Shi;
    std::size_t l = 2;
    std::size_t p = 0;
    std::size_t k = 1;
    Int m = 0;
    Int d = 0; // Shi
    Int c = 1; // Catalan
    bool hat = false;
};

std::string to_string(const DescendantSpec& s);
void validate(const DescendantSpec& s);

// Closed-form weighted digraph of the cell.
WeightedDigraph descendant_digraph(const DescendantSpec& s);
// The first-column origin mutated along the row up to this cell.
WeightedDigraph replay_descendant(const DescendantSpec& s);
// Affine arrangement in R^l.
Arrangement build_descendant(const DescendantSpec& s);

// The row of s in sequence order (Catalan rows interleave plain and hat cells).
std::vector<DescendantSpec> descendant_row(const DescendantSpec& s);

// Exponents of the cone, padded to l + 1.
Exponents descendant_expected_exponents(const DescendantSpec& s);

// The first column as a member of the H (Shi) or E (Catalan) family.
DeformationSpec descendant_origin(const DescendantSpec& s);

// S^k_l, interpolating between Shi (k = 1, 2) and Ish (k = l); cone exponents (0, 1, l^{l-1}).
Arrangement shi_ish(std::size_t l, std::size_t k);
Exponents shi_ish_exponents(std::size_t l);

// Cuts of the witness constructions, as hyperplanes of the cone (cone coordinate last).
std::vector<Hyperplane> hfam_cuts(std::size_t p, std::size_t l, Int m, Int a, Int n);
std::vector<Hyperplane> efam_cuts(std::size_t p, std::size_t l, Int n, Int a, Int m);
std::vector<Hyperplane> descendant_cuts(const DescendantSpec& s);

// Ind-flag witnesses for the cones, from the cuts above with the remaining levels completed by
// search, then checked. nullopt when the construction does not validate.
std::optional<AccuracyWitness> hfam_witness(std::size_t p, std::size_t l, Int m, Int a, Int n,
                                            const SearchOptions& options = {});
std::optional<AccuracyWitness> efam_witness(std::size_t p, std::size_t l, Int n, Int a, Int m,
                                            const SearchOptions& options = {});
std::optional<AccuracyWitness> descendant_witness(const DescendantSpec& s, const SearchOptions& options = {});
// Cat^m(A_l) in the root coordinates: cuts alpha_i = m z along consecutive simple roots.
std::optional<AccuracyWitness> cat_witness(const RootSystem& phi, Int m, const SearchOptions& options = {});

// Strictly nested N-Ish: along the nesting order cut x_{w(i)} = c z with c the least element of
// N_{w(i)} missing from N_{w(i+1)}. Empty when the sets are not strictly nested.
std::vector<Hyperplane> nish_cuts(const std::vector<std::vector<Int>>& sets);
std::optional<AccuracyWitness> nish_witness(const std::vector<std::vector<Int>>& sets,
                                            const SearchOptions& options = {});

struct CellReport {
    DescendantSpec spec;
    std::size_t hyperplanes = 0;
    Polynomial chi; // of the cone
    Exponents expected;
    bool chi_matches = false;    // chi splits with the expected exponents
    bool replay_matches = false; // closed form equals the mutation replay
    bool witness_ok = false;
    std::string note;
    bool ok() const noexcept { return chi_matches && replay_matches && witness_ok; }
};
struct RowReport {
    std::vector<CellReport> cells;
    bool chi_invariant = false; // all cells share one cone chi
    bool ok() const noexcept;
};
RowReport validate_row(const DescendantSpec& s, const SearchOptions& options = {});

} // namespace arrlab
