#pragma once

#include "arrlab/arrangement.hpp"
#include "arrlab/freeness.hpp"
#include "arrlab/roots.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arrlab {

enum class Family { ExtShi, ExtCat, IdealShi, ShiMinusSimples, Bfam, Cfam, Ctilde, Dfam, Ffam, Hfam, Efam };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// One member of a deformation family. Which fields matter depends on the family:
//   ExtShi(m), ExtCat(m)          base, m
//   IdealShi(m, I)                base, m, ideal
//   ShiMinusSimples(m, S)         base, m, simples (indices of simple roots)
//   Bfam/Cfam(p, l, m, a)         Ctilde(l, m, a, n)     Dfam(r, l, a)     Ffam(l, a, n)
//   Hfam(p, l, m, a, n)           Efam(p, l, n, a, m)
struct DeformationSpec {
    Family family = Family::ExtShi;
    std::string base; // root system label
    Int m = 1;
    Int a = 1;
    Int n = 0;
    std::size_t p = 0;
    std::size_t l = 2;
    std::size_t r = 0;
    OrderIdeal ideal;
    std::vector<std::size_t> simples;
};

std::string to_string(const DeformationSpec& s);
// InputError when a parameter is out of range for the family.
void validate_parameters(const DeformationSpec& s);

struct Deformation {
    Arrangement arrangement; // affine, in the coordinates of the defining display
    std::size_t listed = 0;  // equations written down before merging repeats
    bool deduplicated() const noexcept { return listed != arrangement.size(); }
};
Deformation build(const DeformationSpec& s);

// {alpha = j : alpha positive, lo <= j <= hi}
Arrangement deformed_weyl(const RootSystem& phi, Int lo, Int hi);

enum class Provenance { TheoremBacked, Conjectured };
std::string_view provenance_name(Provenance p);

struct ExpectedExponents {
    Exponents exponents; // of the cone, padded with zeros to its dimension
    Provenance provenance = Provenance::TheoremBacked;
};
ExpectedExponents expected_exponents(const DeformationSpec& s);

// The point map y_{permutation[i]} = x_i + shift[i]. Hyperplanes are carried along, so an
// arrangement A becomes {move(H) : H in A}.
struct AffineMove {
    std::string name;
    std::vector<std::size_t> permutation;
    RatVec shift;
};
Hyperplane apply(const AffineMove& move, const Hyperplane& h);
Arrangement apply(const AffineMove& move, const Arrangement& a);
// x_i -> x_i - a/2, taking D^l_l(a) to C^0_l(a, 2a).
AffineMove d_to_c_move(std::size_t l, Int a);
// x_i -> x_{i+1} - a/2 (i < l), x_l -> x_1 - a/2: the (l-1)-dimensional restriction of
// D^{l-1}_l(a) along x_{l-1} - x_l = a, written in its parameter coordinates, to F_{l-1}(a, 0).
AffineMove d_to_f_move(std::size_t l, Int a);

} // namespace arrlab
