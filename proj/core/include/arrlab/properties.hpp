#pragma once

#include "arrlab/arrangement.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace arrlab {

// Randomized and exhaustive consistency checks shared by the test suites, the manifest runner
// and the acceptance binary. Runs are deterministic in the seed.
struct PropertyReport {
    std::string name;
    std::size_t cases = 0;   // instances where the property had something to say
    std::size_t sampled = 0; // instances drawn
    std::vector<std::string> failures = {};
    bool ok() const noexcept { return failures.empty() && cases > 0; }
};

struct RandomArrangementOptions {
    std::size_t max_dim = 4;
    std::size_t max_hyperplanes = 10;
    Int max_coeff = 2;
    bool central = false;
};
Arrangement random_arrangement(std::mt19937_64& rng, const RandomArrangementOptions& options = {});

// chi(cone(A), t) = (t - 1) chi(A, t).
PropertyReport check_coning_identity(std::size_t count, std::uint64_t seed, const RandomArrangementOptions& options = {});
// Certified free => chi splits with the certificate's exponents; supersolvable chains agree;
// t chi(A) = (t - |A \ A_X|) chi(A_X) for every modular coatom X.
PropertyReport check_terao_factorization(std::size_t count, std::uint64_t seed);
// chi(A) = chi(A') - chi(A'') for every hyperplane, and the exponent bookkeeping of addition and
// deletion whenever the restriction and one of A, A' are certified.
PropertyReport check_addition_deletion(std::size_t count, std::uint64_t seed);
// Witness search and accuracy reports give byte-identical JSON across runs and round-trips, and
// every emitted witness passes check_witness.
PropertyReport check_witness_determinism(std::size_t count, std::uint64_t seed);
// Along every descendant row with l <= max_l: the mutation replay equals the closed form and the
// cone chi stays fixed.
PropertyReport check_mutation_rows(std::size_t max_l);

std::vector<std::string_view> property_names();
// InputError for an unknown name. Randomized properties draw `count` instances; mutation-rows
// ignores count and seed and sweeps l <= max_l.
PropertyReport run_property(std::string_view name, std::size_t count, std::uint64_t seed, std::size_t max_l = 3);

} // namespace arrlab
