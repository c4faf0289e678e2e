#pragma once

#include "arrlab/arrangement.hpp"
#include "arrlab/polynomial.hpp"
#include "arrlab/poset.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace arrlab {

// Sorted exponent multiset; its length is the ambient dimension.
using Exponents = IntVec;

Exponents pad_exponents(Exponents e, std::size_t dim);
// Exponents as a dual partition of MAT block sizes: e_i = #{k : |pi_k| >= dim - i + 1}.
Exponents dual_partition_exponents(const std::vector<std::size_t>& block_sizes, std::size_t dim);

enum class CertificateKind { Supersolvable, Inductive, Recursive, Divisional, MAT };
std::string_view kind_name(CertificateKind kind);
std::optional<CertificateKind> kind_from_name(std::string_view name);

// One node of an addition-deletion derivation. The node describes a specific arrangement that
// the replayer reconstructs from its parent: deletion children are A \ H, restriction children
// A^H, addition children A u {H}. Leaves are central arrangements of rank at most 2.
struct DerivationNode;
using DerivationRef = std::shared_ptr<const DerivationNode>;

struct DerivationNode {
    enum class Step { Leaf, Delete, Add };
    Step step = Step::Leaf;
    std::size_t hyperplane = 0; // Delete: index into the node's arrangement
    Hyperplane added;           // Add: the hyperplane joined to the arrangement
    DerivationRef first;        // Delete: A \ H; Add: A u {H}
    DerivationRef restriction;  // A^H, resp. (A u {H})^H
    Exponents exponents;
};

// Inductive derivations run on essentialized, sorted representatives; recursive ones on the
// sorted arrangement itself, so additions stay in the caller's coordinates.
struct InductiveDerivation {
    DerivationRef root;
};
struct RecursiveDerivation {
    DerivationRef root;
};

struct DivisionalFlag {
    std::vector<Subspace> flats;       // ascending dimension; the ambient space is implicit
    std::vector<Polynomial> quotients; // chi(A^{X_{i+1}}) / chi(A^{X_i}), last one against chi(A)
};

struct MatPartition {
    std::vector<std::vector<std::size_t>> blocks;
};

struct FreenessCertificate {
    Arrangement arrangement;
    Exponents exponents;
    std::variant<ModularChain, InductiveDerivation, RecursiveDerivation, DivisionalFlag, MatPartition> derivation;

    CertificateKind kind() const;
};

struct FreeCertified {
    FreenessCertificate certificate;
};
struct NotFree {
    std::string reason;
};
struct Unknown {
    std::string reason;
    // The search ran to completion without finding its certificate (as opposed to a budget stop).
    bool exhausted = false;
};
using FreenessVerdict = std::variant<FreeCertified, NotFree, Unknown>;

inline bool certified(const FreenessVerdict& v) { return std::holds_alternative<FreeCertified>(v); }
const FreenessCertificate* certificate_of(const FreenessVerdict& v);
std::string describe(const FreenessVerdict& v);

struct SearchOptions {
    std::size_t max_nodes = 200'000;
    PosetOptions poset;
};

// Canonical form used by the inductive search.
Arrangement canonical_form(const Arrangement& a);

FreenessVerdict supersolvable_free(const Arrangement& a, const SearchOptions& options = {});
FreenessVerdict inductively_free(const Arrangement& a, const SearchOptions& options = {});
FreenessVerdict recursively_free(const Arrangement& a, const std::vector<Hyperplane>& pool, std::size_t max_additions,
                                 const SearchOptions& options = {});
FreenessVerdict divisionally_free(const Arrangement& a, const SearchOptions& options = {});
FreenessVerdict divisionally_free(const IntersectionPoset& poset);

// nullopt when one of the three conditions fails; InputError when pi is not a partition.
std::optional<Exponents> verify_mat_partition(const Arrangement& a, const MatPartition& pi);

struct MatSearch {
    enum class Outcome { Found, None, Unknown };
    Outcome outcome = Outcome::Unknown;
    MatPartition partition;
    std::string note;
};
MatSearch mat_free_search(const Arrangement& a, const SearchOptions& options = {});

enum class Method { Auto, Supersolvable, Inductive, Divisional, MAT };
FreenessVerdict certify_free(const Arrangement& a, Method method = Method::Auto, const SearchOptions& options = {});

struct ExponentReport {
    Exponents exponents;
    std::optional<CertificateKind> certified_by; // nullopt: chi roots only, uncertified
};
std::optional<ExponentReport> exponents(const Arrangement& a, const SearchOptions& options = {});

struct Replay {
    bool ok = true;
    std::string message;
};
// Re-derives every claim of the certificate with fresh computations.
Replay replay(const FreenessCertificate& c, const PosetOptions& options = {});

} // namespace arrlab
