#include "arrlab/descendants.hpp"
#include "arrlab/errors.hpp"

#include <doctest.h>

using namespace arrlab;

namespace {

DescendantSpec shi(std::size_t l, std::size_t p, std::size_t k, Int m, Int d) {
    DescendantSpec s;
    s.genealogy = Genealogy::Shi;
    s.l = l;
    s.p = p;
    s.k = k;
    s.m = m;
    s.d = d;
    return s;
}

DescendantSpec catalan(std::size_t l, std::size_t p, std::size_t k, Int c, Int m, bool hat = false) {
    DescendantSpec s;
    s.genealogy = Genealogy::Catalan;
    s.l = l;
    s.p = p;
    s.k = k;
    s.c = c;
    s.m = m;
    s.hat = hat;
    return s;
}

} // namespace

TEST_SUITE("descendants") {

TEST_CASE("Shi matrix cell from the figure") {
    for (Int m = 0; m <= 1; ++m)
        for (Int d = 0; d <= 1; ++d) {
            auto g = descendant_digraph(shi(3, 0, 2, m, d));
            CHECK(g.arcs == std::set<Edge>{{0, 1}});
            CHECK(g.weights[0] == VertexWeight::interval(-m - 2, d));
            CHECK(g.weights[1] == VertexWeight::interval(-m - 2, d));
            CHECK(g.weights[2] == VertexWeight::interval(-m - 1, d));
        }
    auto end = descendant_digraph(shi(3, 0, 3, 0, 0));
    CHECK(end.arcs.empty());
}

TEST_CASE("closed forms equal the mutation replay") {
    for (std::size_t l = 1; l <= 5; ++l)
        for (std::size_t p = 0; p <= l; ++p)
            for (Int m = 0; m <= 1; ++m)
                for (Int x = 0; x <= 1; ++x) {
                    for (const auto& cell : descendant_row(shi(l, p, 1, m, x))) {
                        CAPTURE(to_string(cell));
                        CHECK(descendant_digraph(cell) == replay_descendant(cell));
                    }
                    for (const auto& cell : descendant_row(catalan(l, p, 1, x + 1, m))) {
                        CAPTURE(to_string(cell));
                        CHECK(descendant_digraph(cell) == replay_descendant(cell));
                    }
                }
}

TEST_CASE("rows") {
    CHECK(descendant_row(shi(3, 1, 1, 0, 0)).size() == 3);
    auto row = descendant_row(catalan(3, 1, 1, 1, 0));
    REQUIRE(row.size() == 5);
    CHECK(!row[0].hat);
    CHECK(row[1].hat);
    CHECK(row[1].k == 1);
    CHECK(row[4].k == 3);
}

TEST_CASE("origins are H and E family members") {
    for (std::size_t l = 1; l <= 4; ++l)
        for (std::size_t p = 0; p <= l; ++p) {
            auto s = shi(l, p, 1, 1, 1);
            CHECK(build_descendant(s).sorted() == build(descendant_origin(s)).arrangement.sorted());
            CHECK(descendant_expected_exponents(s) == expected_exponents(descendant_origin(s)).exponents);
            auto c = catalan(l, p, 1, 2, 1);
            CHECK(build_descendant(c).sorted() == build(descendant_origin(c)).arrangement.sorted());
            CHECK(descendant_expected_exponents(c) == expected_exponents(descendant_origin(c)).exponents);
        }
}

TEST_CASE("expected exponents") {
    CHECK(descendant_expected_exponents(shi(3, 1, 2, 0, 0)) == IntVec{1, 3, 4, 4});
    CHECK(descendant_expected_exponents(catalan(2, 0, 1, 1, 0)) == IntVec{1, 4, 5});
}

TEST_CASE("last columns are nested N-Ish") {
    for (std::size_t l = 2; l <= 4; ++l)
        for (std::size_t p = 0; p <= l; ++p) {
            auto s = descendant_digraph(shi(l, p, l, 1, 0));
            auto c = descendant_digraph(catalan(l, p, l, 1, 0));
            CHECK(s.arcs.empty());
            CHECK(c.arcs.empty());
            std::vector<std::vector<Int>> ns, nc;
            for (std::size_t i = 0; i < l; ++i) {
                ns.push_back(s.weights[i].values);
                nc.push_back(c.weights[i].values);
            }
            CHECK(nishi_nested(ns));
            auto nest = nishi_nested(nc);
            REQUIRE(nest);
            CHECK(nest->strict);
        }
}

TEST_CASE("rows keep chi and validate") {
    for (std::size_t l = 1; l <= 3; ++l)
        for (std::size_t p = 0; p <= l; ++p) {
            for (auto [m, d] : {std::pair<Int, Int>{0, 0}, {1, 0}, {0, 1}}) {
                auto r = validate_row(shi(l, p, 1, m, d));
                CAPTURE(to_string(shi(l, p, 1, m, d)));
                for (const auto& cell : r.cells)
                    CHECK_MESSAGE(cell.ok(), to_string(cell.spec), ": ", cell.note);
                CHECK(r.chi_invariant);
            }
            for (auto [c, m] : {std::pair<Int, Int>{1, 0}, {2, 0}, {1, 1}}) {
                auto r = validate_row(catalan(l, p, 1, c, m));
                for (const auto& cell : r.cells)
                    CHECK_MESSAGE(cell.ok(), to_string(cell.spec), ": ", cell.note);
                CHECK(r.chi_invariant);
            }
        }
}

TEST_CASE("H and E family witnesses") {
    for (std::size_t l = 1; l <= 3; ++l)
        for (std::size_t p = 0; p <= l; ++p)
            for (Int a = 1; a <= 2; ++a)
                for (Int n = 1; n <= 2; ++n) {
                    CAPTURE(l);
                    CAPTURE(p);
                    CAPTURE(a);
                    CAPTURE(n);
                    CHECK(hfam_witness(p, l, 0, a, n));
                    CHECK(efam_witness(p, l, n, a, 0));
                }
    auto w = hfam_witness(2, 3, 1, 1, 1);
    REQUIRE(w);
    CHECK(w->kind == WitnessKind::IndFlag);
    CHECK(hfam_cuts(2, 2, 0, 1, 1).size() == 1);
}

TEST_CASE("Catalan witnesses in root coordinates") {
    for (const char* base : {"A2", "A3"})
        for (Int m = 1; m <= 2; ++m) {
            CAPTURE(base);
            CAPTURE(m);
            CHECK(cat_witness(build_root_system(base), m));
        }
}

TEST_CASE("Catalan descendant cuts follow the proof") {
    auto cuts = descendant_cuts(catalan(4, 1, 2, 1, 0));
    REQUIRE(cuts.size() == 2);
    CHECK(cuts[0] == normalize(IntVec{1, 0, 0, 0, 2}, 0)); // x_1 = (1 - c - k) z
    CHECK(cuts[1] == normalize(IntVec{1, -1, 0, 0, -1}, 0)); // x_1 - x_2 = z
    CHECK(descendant_witness(catalan(4, 1, 2, 1, 0)));
    CHECK(descendant_witness(catalan(4, 3, 2, 1, 0, true)));
}

TEST_CASE("arrangements between Shi and Ish") {
    for (std::size_t l = 2; l <= 4; ++l)
        for (std::size_t k = 1; k <= l; ++k) {
            CAPTURE(l);
            CAPTURE(k);
            CHECK(char_poly(cone(shi_ish(l, k))) == Polynomial::from_roots(shi_ish_exponents(l)));
        }
    CHECK(shi_ish(3, 1) == shi_ish(3, 2));
    for (std::size_t l = 1; l <= 3; ++l)
        for (std::size_t k = 1; k <= l; ++k) {
            Arrangement a = product(build_descendant(shi(l, 0, k, 0, 0)), Arrangement(1, {}));
            Arrangement b = product(build_descendant(shi(l, l, k, 1, 0)), Arrangement(1, {}));
            CHECK(a == b);
            CHECK(char_poly(cone(a)) == char_poly(cone(shi_ish(l + 1, k + 1))));
            CHECK(a.size() == shi_ish(l + 1, k + 1).size());
        }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(shi(3, 4, 1, 0, 0)), InputError);
    CHECK_THROWS_AS(validate(shi(3, 0, 4, 0, 0)), InputError);
    CHECK_THROWS_AS(validate(shi(3, 0, 1, -1, 0)), InputError);
    CHECK_THROWS_AS(validate(catalan(3, 0, 3, 1, 0, true)), InputError);
    CHECK_THROWS_AS(validate(catalan(3, 0, 1, 0, 0)), InputError);
    auto s = shi(3, 0, 1, 0, 0);
    s.hat = true;
    CHECK_THROWS_AS(validate(s), InputError);
    CHECK(genealogy_from_name("catalan") == Genealogy::Catalan);
    CHECK(!genealogy_from_name("tamari"));
}

} // TEST_SUITE
