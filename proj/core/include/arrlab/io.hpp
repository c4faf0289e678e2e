#pragma once

#include "arrlab/accuracy.hpp"
#include "arrlab/deformations.hpp"
#include "arrlab/descendants.hpp"
#include "arrlab/freeness.hpp"
#include "arrlab/graphs.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace arrlab {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "arrlab/1";

// Every top-level document carries {"schema": kSchema, "type": <type>}. Loaders accept a
// missing schema but reject a different one. Shape errors are InputError.
Json document(std::string_view type, Json body);
void check_document(const Json& j, std::string_view type);

Json to_json(const Hyperplane& h);
Hyperplane hyperplane_from_json(const Json& j);

// {dim, hyperplanes: [{normal, offset}]}. The loader canonicalizes and rejects repeats.
Json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

// {coeffs, roots | null}
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {dim, equations: [hyperplane]}
Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, std::size_t ambient);

Json to_json(const FreenessCertificate& c);
FreenessCertificate certificate_from_json(const Json& j);

// {kind, k, flats: [{dim, equations}], exponents_per_level, certificates, cuts}
Json to_json(const AccuracyWitness& w);
AccuracyWitness witness_from_json(const Json& j, std::size_t ambient);

Json to_json(const AccuracyReport& r);

// {n, edges}; a digraph adds arcs and weights {"v": [lo, hi] | [[values]]}.
Json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);
Json to_json(const WeightedDigraph& d);
WeightedDigraph digraph_from_json(const Json& j);

Json to_json(const DeformationSpec& s);
DeformationSpec deformation_from_json(const Json& j);

Json to_json(const DescendantSpec& s);
DescendantSpec descendant_from_json(const Json& j);
Json to_json(const CellReport& c);
Json to_json(const RowReport& r);

Json read_json(const std::filesystem::path& path);
// Two-space indentation, sorted keys, trailing newline: equal values give equal bytes.
void write_json(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j);

} // namespace arrlab
