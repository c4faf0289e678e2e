#pragma once

#include "arrlab/arrangement.hpp"
#include "arrlab/freeness.hpp"
#include "arrlab/poset.hpp"
#include "arrlab/roots.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arrlab {

enum class WitnessKind { Almost, Accurate, KAccurate, KCoaccurate, Flag, IndFlag };
std::string_view witness_kind_name(WitnessKind k);
std::optional<WitnessKind> witness_kind_from_name(std::string_view name);

enum class Decision { Yes, No, Undecided };
std::string_view decision_name(Decision d);

struct WitnessLevel {
    Subspace flat;       // in the ambient coordinates of the arrangement
    Exponents exponents; // of the restriction to the flat
    std::optional<CertificateKind> certificate;
};

// Levels run over increasing dimension up to the ambient space itself. Dimensions below
// max(1, dim of the center) carry no flat and are left out. For KAccurate, k is the top
// dimension of the chain at the bottom of the witness; for KCoaccurate it is ambient - that.
struct AccuracyWitness {
    WitnessKind kind = WitnessKind::Accurate;
    std::size_t k = 0;
    std::vector<WitnessLevel> levels;
    // Optional: hyperplanes whose running intersections give the top of the chain.
    std::vector<Hyperplane> cuts;

    std::size_t chain_top(std::size_t ambient) const;
};

// Candidate flats at one dimension and why each was rejected.
struct Frontier {
    struct Entry {
        std::vector<std::size_t> generators;
        std::string outcome;
    };
    std::size_t dim = 0;
    std::size_t flats = 0; // all flats of that dimension
    std::vector<Entry> entries;
    std::string note;
};

struct AccuracyReport {
    Exponents exponents;
    std::string exponent_source; // a certificate kind, or "asserted"
    Decision almost = Decision::Undecided;
    Decision accurate = Decision::Undecided;
    Decision flag = Decision::Undecided;
    Decision ind_flag = Decision::Undecided;
    std::optional<std::size_t> k;          // maximal k for k-accuracy
    std::optional<std::size_t> coaccuracy; // ambient - k
    std::vector<AccuracyWitness> witnesses;
    std::vector<Frontier> frontier;
    std::vector<std::string> notes;

    const AccuracyWitness* witness(WitnessKind kind) const;
};

struct AccuracyOptions {
    SearchOptions search;
    bool almost = true;
    bool levels = true; // accuracy and maximal k; off means flag questions only
    bool ind_flag = true;
};

// Requires a central free arrangement. Exponents are certified unless asserted; NotFree is an
// InputError and undecided freeness a BudgetExceeded.
AccuracyReport accuracy_profile(const Arrangement& a, const AccuracyOptions& options = {},
                                const std::optional<Exponents>& asserted = std::nullopt);

std::optional<AccuracyWitness> flag_accuracy(const Arrangement& a, const SearchOptions& options = {});

// Replays every claim with fresh computations; `why` receives the first failure.
bool check_witness(const Arrangement& a, const AccuracyWitness& w, std::string* why = nullptr,
                   const SearchOptions& options = {});

// Flag witness whose first rank - 1 cuts are hyperplanes of the cone with linear part a simple
// root of phi (the cone coordinate is last). InputError if the arrangement is not such a cone.
std::optional<AccuracyWitness> simple_root_witness(const Arrangement& cone, const RootSystem& phi,
                                                   const SearchOptions& options = {});

// Witness from an explicit list of hyperplanes: the running intersections give the chain from
// the ambient space down, and the remaining levels are completed by search. A cut need not lie
// in `a`, only cut the running flat down by one dimension to another flat of `a`. nullopt when
// that fails, a level has the wrong exponents, or no completion exists.
std::optional<AccuracyWitness> witness_from_cuts(const Arrangement& a, const std::vector<Hyperplane>& cuts,
                                                 WitnessKind kind = WitnessKind::Flag,
                                                 const SearchOptions& options = {});

} // namespace arrlab
