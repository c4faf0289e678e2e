#pragma once

#include "arrlab/accuracy.hpp"
#include "arrlab/arrangement.hpp"
#include "arrlab/freeness.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace arrlab {

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph on 0..n-1.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n);
    SimpleGraph(std::size_t n, const std::vector<Edge>& edges);

    std::size_t size() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v] != 0; }
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::size_t degree(std::size_t v) const;
    // Sorted, with u < v.
    std::vector<Edge> edges() const;

    void add_edge(std::size_t u, std::size_t v);
    std::size_t add_vertex();

    // Induced subgraph on the given vertices, renumbered in the given order.
    SimpleGraph induced(const std::vector<std::size_t>& vertices) const;
    std::vector<std::vector<std::size_t>> components() const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<char>> adj_;
    std::size_t edges_ = 0;
};

std::string to_string(const SimpleGraph& g);

Arrangement graphic_arrangement(const SimpleGraph& g);
SimpleGraph complete_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);

struct ChordalityCertificate {
    std::vector<std::size_t> peo;   // perfect elimination ordering, if chordal
    std::vector<std::size_t> cycle; // chordless cycle of length > 3 otherwise
    bool chordal() const noexcept { return cycle.empty(); }
};
ChordalityCertificate chordality(const SimpleGraph& g);
std::optional<std::vector<std::size_t>> is_chordal(const SimpleGraph& g);

// Elimination by simple vertices (neighbors' closed neighborhoods form a chain).
bool is_strongly_chordal(const SimpleGraph& g);
std::optional<std::vector<std::size_t>> strong_elimination_ordering(const SimpleGraph& g);

// Later-neighbor counts along a perfect elimination ordering, sorted. InputError if not chordal.
Exponents graphic_exponents(const SimpleGraph& g);

// Q_l(M): inner K_l on 0..l-1 and m_ij outer triangles on each inner edge. Weights are listed
// for the pairs (0,1), (0,2), ..., (0,l-1), (1,2), ... in that order.
struct QSpec {
    std::size_t l = 2;
    std::vector<Int> weights;
};
SimpleGraph build_q_family(const QSpec& spec);
SimpleGraph build_sun(std::size_t n);
// Q_4 with all weights k plus k further vertices joined to inner vertices 0, 1, 2.
SimpleGraph build_q4_ext(std::size_t k);

// Fixed examples. A 10-vertex chordal graph whose arrangement is free but not accurate; the
// same graph with an 11th vertex joined to 0, 1, 2, 9, which is flag-accurate; and a strongly
// chordal graph on 6 vertices outside the class below.
SimpleGraph example_not_accurate();
SimpleGraph example_not_accurate_extended();
SimpleGraph example_strong_not_g();

// Merge v into u (both kept as u) and drop v; later vertices shift down by one.
SimpleGraph contract(const SimpleGraph& g, Edge e);
// New last vertex adjacent to all others.
SimpleGraph add_dominating_vertex(const SimpleGraph& g);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
// Identify vertex u of a with vertex v of b; b's other vertices are appended in order.
SimpleGraph identify_vertices(const SimpleGraph& a, std::size_t u, const SimpleGraph& b, std::size_t v);

// How a member of the class closed under one-vertex graphs, disjoint unions, vertex
// identifications and dominating vertices is built. Vertices refer to the input graph.
struct ClassGDerivation {
    enum class Rule { Vertex, Union, Identify, Dominate };
    Rule rule = Rule::Vertex;
    std::vector<std::size_t> vertices;
    std::size_t pivot = 0; // identified or dominating vertex
    std::vector<ClassGDerivation> parts;
};
std::optional<ClassGDerivation> class_g_derivation(const SimpleGraph& g);
bool in_class_g(const SimpleGraph& g);
std::string to_string(const ClassGDerivation& d);

// Canonical relabelling for small graphs (exhaustive within degree classes).
SimpleGraph canonical_form(const SimpleGraph& g);
// One representative per isomorphism class on exactly n vertices; n <= 7.
std::vector<SimpleGraph> graphs_up_to_isomorphism(std::size_t n);

// Set partition of the vertices, blocks labelled by first occurrence.
using VertexPartition = std::vector<std::size_t>;
SimpleGraph quotient(const SimpleGraph& g, const VertexPartition& p);
// The flat {x_i = x_j whenever i, j share a block}.
Subspace partition_flat(const VertexPartition& p);

// Accuracy of a graphic arrangement, decided on contractions. Witness flats are lifted into the
// coordinates of graphic_arrangement(g). Freeness of each contraction is decided exactly by
// chordality, so every notion comes out Yes or No.
AccuracyReport graphic_accuracy(const SimpleGraph& g, const AccuracyOptions& options = {});
// Witness check on the graph side: levels must be flats of the graphic arrangement, nested as
// required, with chordal contractions of the stated exponents.
bool check_graphic_witness(const SimpleGraph& g, const AccuracyWitness& w, std::string* why = nullptr);

// Vertex weights of a digraphic arrangement: a finite set of integers.
struct VertexWeight {
    std::vector<Int> values; // sorted, distinct
    static VertexWeight interval(Int lo, Int hi);
    static VertexWeight set(std::vector<Int> values);
    bool is_interval() const;
    std::size_t size() const noexcept { return values.size(); }
    friend bool operator==(const VertexWeight&, const VertexWeight&) = default;
};

struct WeightedDigraph {
    std::size_t n = 0;
    std::set<Edge> arcs; // (i, j): hyperplane x_i - x_j = 1
    std::vector<VertexWeight> weights;
    friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;
};
void validate(const WeightedDigraph& d);
std::string to_string(const WeightedDigraph& d);

// x_i - x_j = 0 for i < j, x_i - x_j = 1 per arc, x_i = w for w in the weight of i.
Arrangement digraphic_arrangement(const WeightedDigraph& d);

// Mutations act on the induced subgraph on the first `scope` vertices (all when 0); the
// remaining vertices must be isolated and keep their weights. InputError when v is not a
// sink (source) there, or a weight in scope is not an interval.
WeightedDigraph mutate_sink(const WeightedDigraph& d, std::size_t v, std::size_t scope = 0);
WeightedDigraph mutate_source(const WeightedDigraph& d, std::size_t v, std::size_t scope = 0);

// N-Ish: edgeless digraph with the given weight sets.
WeightedDigraph nish(const std::vector<std::vector<Int>>& sets);

struct Nesting {
    std::vector<std::size_t> order; // w with N_{w(i)} contained in N_{w(i-1)}
    bool strict = false;
};
std::optional<Nesting> nishi_nested(const std::vector<std::vector<Int>>& sets);
// (1, |N_{w(i)}| + i - 1) for the cone.
Exponents nish_cone_exponents(const std::vector<std::vector<Int>>& sets, const Nesting& nesting);

// The flat X_v of the cone of a digraphic arrangement (cone coordinate last).
Subspace simplicial_flat(const WeightedDigraph& d, std::size_t v);

} // namespace arrlab
