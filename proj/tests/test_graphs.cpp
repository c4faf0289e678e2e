#include "arrlab/errors.hpp"
#include "arrlab/graphs.hpp"
#include "arrlab/poset.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace arrlab;

namespace {

std::vector<SimpleGraph> all_labelled(std::size_t n) {
    std::vector<Edge> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<SimpleGraph> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
        SimpleGraph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                g.add_edge(pairs[i].first, pairs[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

// Closure of the four rules, by canonical form, up to n vertices.
std::set<std::vector<Edge>> class_g_closure(std::size_t n) {
    std::vector<std::vector<SimpleGraph>> by_size(n + 1);
    std::set<std::vector<Edge>> seen;
    auto add = [&](const SimpleGraph& g) {
        if (g.size() > n)
            return false;
        SimpleGraph c = canonical_form(g);
        if (!seen.insert(c.edges()).second)
            return false;
        by_size[c.size()].push_back(c);
        return true;
    };
    add(SimpleGraph(1));
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t a = 1; a <= n; ++a)
            for (std::size_t b = 1; a + b - 1 <= n; ++b)
                for (std::size_t i = 0; i < by_size[a].size(); ++i)
                    for (std::size_t j = 0; j < by_size[b].size(); ++j) {
                        SimpleGraph g = by_size[a][i], h = by_size[b][j];
                        grew |= add(disjoint_union(g, h));
                        for (std::size_t u = 0; u < g.size(); ++u)
                            for (std::size_t v = 0; v < h.size(); ++v)
                                grew |= add(identify_vertices(g, u, h, v));
                    }
        for (std::size_t a = 1; a < n; ++a)
            for (std::size_t i = 0; i < by_size[a].size(); ++i)
                grew |= add(add_dominating_vertex(by_size[a][i]));
    }
    return seen;
}

} // namespace

TEST_SUITE("graphs") {

TEST_CASE("graphic arrangements") {
    CHECK(graphic_arrangement(complete_graph(3)).size() == 3);
    CHECK(char_poly(graphic_arrangement(complete_graph(3))) == Polynomial::from_roots({0, 1, 2}));
    CHECK(graphic_arrangement(SimpleGraph(4)).size() == 0);
    Arrangement c4 = graphic_arrangement(cycle_graph(4));
    CHECK(c4.size() == 4);
    CHECK(!certified(certify_free(c4)));
    CHECK_THROWS_AS(SimpleGraph(2, {{0, 0}}), InputError);
}

TEST_CASE("chordality certificates") {
    auto k5 = chordality(complete_graph(5));
    CHECK(k5.chordal());
    CHECK(k5.peo.size() == 5);
    for (std::size_t n = 4; n <= 7; ++n) {
        auto c = chordality(cycle_graph(n));
        REQUIRE(!c.chordal());
        CHECK(c.cycle.size() == n);
    }
    CHECK(is_chordal(example_not_accurate()));
    CHECK(is_chordal(example_not_accurate_extended()));

    // A returned cycle is always induced and of length > 3.
    for (const auto& g : all_labelled(5)) {
        auto c = chordality(g);
        if (c.chordal())
            continue;
        REQUIRE(c.cycle.size() > 3);
        const std::size_t k = c.cycle.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
                CHECK(g.adjacent(c.cycle[i], c.cycle[j]) == consecutive);
            }
    }
}

TEST_CASE("freeness matches chordality for 5 vertices") {
    for (const auto& g : graphs_up_to_isomorphism(5)) {
        CAPTURE(to_string(g));
        Arrangement a = graphic_arrangement(g);
        auto v = certify_free(a);
        CHECK(certified(v) == is_chordal(g).has_value());
        if (certified(v))
            CHECK(pad_exponents(certificate_of(v)->exponents, g.size()) == graphic_exponents(g));
    }
}

TEST_CASE("isomorphism classes") {
    CHECK(graphs_up_to_isomorphism(3).size() == 4);
    CHECK(graphs_up_to_isomorphism(4).size() == 11);
    CHECK(graphs_up_to_isomorphism(5).size() == 34);
    CHECK(graphs_up_to_isomorphism(6).size() == 156);
    CHECK(canonical_form(SimpleGraph(3, {{0, 1}})) == canonical_form(SimpleGraph(3, {{1, 2}})));
}

TEST_CASE("strong chordality") {
    CHECK(!is_strongly_chordal(build_sun(3)));
    CHECK(!is_strongly_chordal(build_sun(4)));
    CHECK(is_strongly_chordal(example_strong_not_g()));
    CHECK(!in_class_g(example_strong_not_g()));
    CHECK(!is_strongly_chordal(cycle_graph(4)));
    CHECK(is_strongly_chordal(complete_graph(5)));
}

TEST_CASE("Q family constructors") {
    CHECK(build_sun(3) == build_q_family({3, {1, 1, 1}}));
    CHECK(build_q_family({2, {0}}) == complete_graph(2));
    SimpleGraph s4 = build_sun(4);
    CHECK(s4.size() == 8);
    CHECK(s4.edge_count() == 6 + 8);
    for (std::size_t k = 1; k <= 3; ++k) {
        SimpleGraph g = build_q4_ext(k);
        CHECK(g.size() == 4 + 7 * k);
        CHECK(g.edge_count() == 6 + 12 * k + 3 * k);
    }
    CHECK_THROWS_AS(build_q_family({3, {1, 1}}), InputError);
    CHECK_THROWS_AS(build_sun(2), InputError);
}

TEST_CASE("graphic exponents") {
    CHECK(graphic_exponents(complete_graph(4)) == IntVec{0, 1, 2, 3});
    QSpec q{4, {1, 0, 2, 0, 3, 1}};
    CHECK(graphic_exponents(build_q_family(q)) == IntVec{0, 1, 2, 2, 2, 2, 2, 2, 2, 2, 3});
    for (std::size_t k = 1; k <= 3; ++k) {
        Exponents e{0, 1};
        e.insert(e.end(), 6 * k + 1, 2);
        e.insert(e.end(), k + 1, 3);
        CHECK(graphic_exponents(build_q4_ext(k)) == e);
    }
    CHECK(graphic_exponents(example_not_accurate_extended()) == IntVec{0, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3});
    CHECK_THROWS_AS(graphic_exponents(cycle_graph(5)), InputError);
    SimpleGraph g = example_not_accurate();
    Exponents plus = graphic_exponents(add_dominating_vertex(g));
    Exponents base = graphic_exponents(g);
    Exponents shifted{0, 1};
    for (std::size_t i = 1; i < base.size(); ++i)
        shifted.push_back(base[i] + 1);
    std::sort(shifted.begin(), shifted.end());
    CHECK(plus == shifted);
}

TEST_CASE("contraction is restriction") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        SimpleGraph g(6);
        for (std::size_t u = 0; u < 6; ++u)
            for (std::size_t v = u + 1; v < 6; ++v)
                if (rng() % 2)
                    g.add_edge(u, v);
        for (auto e : g.edges()) {
            auto r = restrict(graphic_arrangement(g), graphic_arrangement(g).index_of(difference_hyperplane(6, e.first, e.second, 0)).value());
            CHECK(char_poly(r) == char_poly(graphic_arrangement(contract(g, e))));
        }
    }
    // An inner edge without triangles contracts within the family; an outer edge lowers a weight.
    SimpleGraph q = build_q_family({4, {0, 1, 1, 1, 1, 1}});
    CHECK(canonical_form(contract(q, {0, 1})) == canonical_form(build_q_family({3, {2, 2, 1}})));
    SimpleGraph outer = build_q_family({3, {2, 0, 0}});
    CHECK(canonical_form(contract(outer, {0, 3})) == canonical_form(build_q_family({3, {1, 0, 0}})));
    CHECK(contract(complete_graph(2), {0, 1}).size() == 1);
    CHECK_THROWS_AS(contract(cycle_graph(4), {0, 2}), InputError);
}

TEST_CASE("class G recognizer agrees with the closure") {
    auto closure = class_g_closure(6);
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : graphs_up_to_isomorphism(n)) {
            CAPTURE(to_string(g));
            auto d = class_g_derivation(g);
            CHECK(d.has_value() == (closure.count(g.edges()) > 0));
            if (d)
                CHECK(is_strongly_chordal(g));
        }
    SimpleGraph p3 = add_dominating_vertex(SimpleGraph(2));
    REQUIRE(in_class_g(p3));
    CHECK(to_string(*class_g_derivation(p3)) == "dominate@2(union(K1(0), K1(1)))");
}

TEST_CASE("graphic accuracy: fixed examples") {
    auto r = graphic_accuracy(example_not_accurate());
    CHECK(r.accurate == Decision::No);
    CHECK(r.flag == Decision::No);
    CHECK(!r.frontier.empty());

    SimpleGraph ext = example_not_accurate_extended();
    auto re = graphic_accuracy(ext);
    CHECK(re.exponents == IntVec{0, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3});
    CHECK(re.flag == Decision::Yes);
    CHECK(re.ind_flag == Decision::Yes);
    for (const auto& w : re.witnesses) {
        std::string why;
        CHECK_MESSAGE(check_graphic_witness(ext, w, &why), why);
    }

    for (std::size_t n : {3, 4}) {
        auto rs = graphic_accuracy(build_sun(n));
        CHECK(rs.flag == Decision::Yes);
    }
    auto rq = graphic_accuracy(build_q_family({4, {1, 1, 1, 1, 1, 1}}));
    CHECK(rq.accurate == Decision::No);
    CHECK(rq.flag == Decision::No);
}

TEST_CASE("graphic accuracy: Q4 extensions") {
    for (std::size_t k = 1; k <= 2; ++k) {
        SimpleGraph g = build_q4_ext(k);
        auto r = graphic_accuracy(g);
        CHECK(r.accurate == Decision::Yes);
        CHECK(r.flag == Decision::No);
        REQUIRE(r.coaccuracy);
        CHECK(*r.coaccuracy == k + 1);
        for (const auto& w : r.witnesses) {
            std::string why;
            CHECK_MESSAGE(check_graphic_witness(g, w, &why), why);
        }
    }
}

TEST_CASE("graphic accuracy agrees with the lattice computation") {
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& g : graphs_up_to_isomorphism(n)) {
            if (!is_chordal(g))
                continue;
            CAPTURE(to_string(g));
            Arrangement a = graphic_arrangement(g);
            auto fast = graphic_accuracy(g);
            auto slow = accuracy_profile(a);
            CHECK(fast.flag == slow.flag);
            CHECK(fast.accurate == slow.accurate);
            CHECK(fast.almost == slow.almost);
            CHECK(fast.k == slow.k);
            for (const auto& w : fast.witnesses) {
                std::string why;
                CHECK_MESSAGE(check_witness(a, w, &why), why);
            }
        }
    // The non-accurate example also on the lattice.
    auto slow = accuracy_profile(graphic_arrangement(example_not_accurate()));
    CHECK(slow.accurate == Decision::No);
}

TEST_CASE("dominating vertex keeps coaccuracy") {
    for (const auto& g : {build_q4_ext(1), build_sun(3), example_not_accurate_extended()}) {
        auto r = graphic_accuracy(g);
        auto rv = graphic_accuracy(add_dominating_vertex(g));
        REQUIRE(r.coaccuracy);
        REQUIRE(rv.coaccuracy);
        CHECK(*rv.coaccuracy <= *r.coaccuracy);
    }
}

TEST_CASE("digraphic arrangements and mutations") {
    WeightedDigraph d;
    d.n = 3;
    d.arcs = {{0, 1}, {0, 2}, {1, 2}};
    d.weights = {VertexWeight::interval(-1, 0), VertexWeight::interval(-1, 0), VertexWeight::interval(-1, 0)};
    Arrangement a = digraphic_arrangement(d);
    CHECK(a.size() == 3 + 3 + 6);
    auto m = mutate_sink(d, 2);
    CHECK(m.arcs == std::set<Edge>{{0, 1}});
    CHECK(m.weights[0] == VertexWeight::interval(-2, 0));
    CHECK(m.weights[2] == VertexWeight::interval(-1, 0));
    Arrangement b = digraphic_arrangement(m);
    CHECK(a.size() == b.size());
    CHECK(char_poly(cone(a)) == char_poly(cone(b)));
    CHECK_THROWS_AS(mutate_sink(d, 0), InputError);
    CHECK_THROWS_AS(mutate_source(d, 2), InputError);
    auto s = mutate_source(d, 0);
    CHECK(s.weights[1] == VertexWeight::interval(-1, 1));
    CHECK(char_poly(cone(digraphic_arrangement(s))) == char_poly(cone(a)));

    WeightedDigraph bad = d;
    bad.weights[1] = VertexWeight::set({-1, 1});
    CHECK_THROWS_AS(mutate_sink(bad, 2), InputError);
}

TEST_CASE("mutations preserve size") {
    std::mt19937 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 30; ++trial) {
        WeightedDigraph d;
        d.n = 2 + rng() % 3;
        for (std::size_t i = 0; i < d.n; ++i) {
            Int lo = -static_cast<Int>(rng() % 3);
            d.weights.push_back(VertexWeight::interval(lo, lo + static_cast<Int>(rng() % 3)));
        }
        std::size_t v = rng() % d.n;
        bool sink = rng() % 2;
        for (std::size_t i = 0; i < d.n; ++i)
            for (std::size_t j = 0; j < d.n; ++j)
                if (i != j && rng() % 3 == 0)
                    d.arcs.insert({i, j});
        for (std::size_t u = 0; u < d.n; ++u)
            if (u != v)
                d.arcs.insert(sink ? Edge{u, v} : Edge{v, u});
        auto m = sink ? mutate_sink(d, v) : mutate_source(d, v);
        Arrangement a = digraphic_arrangement(d), b = digraphic_arrangement(m);
        CHECK(a.size() == b.size());
        ++checked;
    }
    CHECK(checked == 30);
}

TEST_CASE("a legal mutation can change chi") {
    WeightedDigraph d;
    d.n = 2;
    d.arcs = {{1, 0}};
    d.weights = {VertexWeight::interval(0, 2), VertexWeight::interval(-1, 1)};
    auto m = mutate_source(d, 1);
    CHECK(m.weights[0] == VertexWeight::interval(0, 3));
    CHECK(digraphic_arrangement(d).size() == digraphic_arrangement(m).size());
    CHECK(char_poly(cone(digraphic_arrangement(d))) != char_poly(cone(digraphic_arrangement(m))));
}

TEST_CASE("N-Ish nestedness") {
    auto n1 = nishi_nested({{1, 2}, {1}});
    REQUIRE(n1);
    CHECK(n1->strict);
    CHECK(nish_cone_exponents({{1, 2}, {1}}, *n1) == IntVec{1, 2, 2});
    Arrangement c = cone(digraphic_arrangement(nish({{1, 2}, {1}})));
    CHECK(char_poly(c) == Polynomial::from_roots({1, 2, 2}));
    CHECK(!nishi_nested({{1}, {2}}));
    CHECK(!certified(certify_free(cone(digraphic_arrangement(nish({{1}, {2}}))))));
    auto eq = nishi_nested({{0, 1}, {0, 1}, {0, 1}});
    REQUIRE(eq);
    CHECK(!eq->strict);
}

TEST_CASE("isolated vertex with the smallest weight gives a modular coatom") {
    WeightedDigraph d;
    d.n = 3;
    d.arcs = {{0, 1}};
    d.weights = {VertexWeight::interval(-2, 1), VertexWeight::interval(-1, 1), VertexWeight::interval(0, 1)};
    Arrangement c = cone(digraphic_arrangement(d));
    auto poset = IntersectionPoset::build(c);
    auto id = poset.find(simplicial_flat(d, 2));
    REQUIRE(id);
    auto coatoms = modular_coatoms(poset);
    CHECK(std::find(coatoms.begin(), coatoms.end(), *id) != coatoms.end());
}

} // TEST_SUITE
