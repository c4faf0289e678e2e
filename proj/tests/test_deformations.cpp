#include "arrlab/deformations.hpp"
#include "arrlab/errors.hpp"
#include "arrlab/poset.hpp"

#include <doctest.h>

using namespace arrlab;

namespace {

DeformationSpec family(Family f, std::size_t p, std::size_t l, Int m, Int a, Int n = 0) {
    DeformationSpec s;
    s.family = f;
    s.p = p;
    s.l = l;
    s.m = m;
    s.a = a;
    s.n = n;
    return s;
}

DeformationSpec rooted(Family f, const char* base, Int m) {
    DeformationSpec s;
    s.family = f;
    s.base = base;
    s.m = m;
    return s;
}

Arrangement cone_of(const DeformationSpec& s) { return cone(build(s).arrangement); }

void check_chi(const DeformationSpec& s) {
    CAPTURE(to_string(s));
    Arrangement c = cone_of(s);
    auto expected = expected_exponents(s);
    CHECK(expected.exponents.size() == c.dim());
    CHECK(char_poly(c) == Polynomial::from_roots(expected.exponents));
}

// Restriction of a cone to the hyperplane normal . (x, z) = 0.
Arrangement restrict_cone(const Arrangement& c, IntVec normal) {
    auto idx = c.index_of(normalize(std::move(normal), 0));
    REQUIRE(idx);
    return restrict(c, *idx).sorted();
}

} // namespace

TEST_SUITE("deformations") {

TEST_CASE("hyperplane counts") {
    CHECK(build(rooted(Family::ExtShi, "A2", 1)).arrangement.size() == 6);
    CHECK(build(rooted(Family::ExtCat, "B2", 1)).arrangement.size() == 12);
    CHECK(build(family(Family::Bfam, 0, 2, 1, 1)).arrangement.sorted() == build(rooted(Family::ExtCat, "B2", 1)).arrangement.sorted());
    CHECK(cone_of(rooted(Family::ExtShi, "A2", 1)).size() == 7);
    auto ct = build(family(Family::Ctilde, 0, 2, 1, 1, 2));
    CHECK(!ct.deduplicated());
    CHECK(ct.arrangement.size() == 2 * 3 + 2 * (3 + 4));
}

TEST_CASE("parameter checks") {
    CHECK_THROWS_AS(build(family(Family::Bfam, 3, 2, 1, 1)), InputError);
    CHECK_THROWS_AS(build(family(Family::Hfam, 0, 2, 1, 0, 1)), InputError);
    CHECK_THROWS_AS(build(rooted(Family::ExtShi, "A2", 0)), InputError);
    DeformationSpec bad = rooted(Family::IdealShi, "A2", 1);
    bad.ideal = {2};
    CHECK_THROWS_AS(build(bad), InputError);
    CHECK(family_from_name("bfam") == Family::Bfam);
    CHECK(!family_from_name("zfam"));
}

TEST_CASE("Dfam at r = 0 is the extended Catalan arrangement of type D") {
    DeformationSpec d = family(Family::Dfam, 0, 4, 0, 1);
    CHECK(build(d).arrangement.sorted() == build(rooted(Family::ExtCat, "D4", 1)).arrangement.sorted());
}

TEST_CASE("root-based families: chi splits as expected") {
    for (const char* base : {"A2", "A3", "B2", "G2", "C2"})
        for (Int m : {1, 2}) {
            check_chi(rooted(Family::ExtShi, base, m));
            check_chi(rooted(Family::ExtCat, base, m));
        }
    CHECK(expected_exponents(rooted(Family::ExtShi, "B2", 2)).exponents == IntVec{1, 8, 8});

    RootSystem b2 = build_root_system("B2");
    for (const auto& ideal : all_ideals(b2))
        for (Int m : {1, 2}) {
            DeformationSpec s = rooted(Family::IdealShi, "B2", m);
            s.ideal = ideal;
            check_chi(s);
        }
    for (std::vector<std::size_t> sigma : {std::vector<std::size_t>{}, {0}, {1}, {0, 1}}) {
        DeformationSpec s = rooted(Family::ShiMinusSimples, "A2", 1);
        s.simples = sigma;
        check_chi(s);
        s.base = "B2";
        s.m = 2;
        check_chi(s);
    }
}

TEST_CASE("coordinate families: chi splits as expected") {
    for (std::size_t l = 1; l <= 3; ++l)
        for (Int m = 0; m <= (l == 3 ? 1 : 2); ++m)
            for (Int a = 0; a <= (l == 3 ? 1 : 2); ++a)
                for (std::size_t p = 0; p <= l; ++p) {
                    check_chi(family(Family::Bfam, p, l, m, a));
                    check_chi(family(Family::Cfam, p, l, m, a));
                }
    CHECK(expected_exponents(family(Family::Bfam, 0, 2, 1, 1)).exponents == IntVec{1, 5, 7});
    for (Int n = 0; n <= 2; ++n)
        check_chi(family(Family::Ctilde, 0, 2, 1, 1, n));
    check_chi(family(Family::Ctilde, 0, 3, 0, 1, 1));
    for (std::size_t p = 0; p <= 3; ++p)
        for (Int m = 0; m <= 1; ++m) {
            check_chi(family(Family::Hfam, p, 3, m, 1, 1));
            check_chi(family(Family::Efam, p, 3, m, 1, 1));
            if (p <= 2) {
                check_chi(family(Family::Hfam, p, 2, m, 2, 2));
                check_chi(family(Family::Efam, p, 2, m, 2, 1));
            }
        }
}

TEST_CASE("conjectured families at the reported sizes") {
    for (std::size_t r = 0; r <= 2; ++r)
        for (Int a = 1; a <= 2; ++a) {
            auto s = family(Family::Dfam, 0, 2, 0, a);
            s.r = r;
            check_chi(s);
        }
    auto d31 = family(Family::Dfam, 0, 3, 0, 1);
    d31.r = 1;
    check_chi(d31);
    CHECK(expected_exponents(d31).provenance == Provenance::Conjectured);
    auto f = family(Family::Ffam, 0, 2, 0, 1, 0);
    CHECK(expected_exponents(f).exponents == IntVec{1, 9, 11});
    CHECK(expected_exponents(f).provenance == Provenance::Conjectured);
    check_chi(f);
    check_chi(family(Family::Ffam, 0, 2, 0, 2, 0));
    check_chi(family(Family::Ffam, 0, 3, 0, 1, 0));
    check_chi(family(Family::Ffam, 0, 2, 0, 1, 1));
}

TEST_CASE("restriction recursions hold as identities") {
    for (std::size_t l = 2; l <= 3; ++l)
        for (std::size_t p = 0; p < l; ++p)
            for (Int m = 0; m <= 2; ++m)
                for (Int a = 0; a <= 2; ++a) {
                    CAPTURE(p);
                    CAPTURE(m);
                    CAPTURE(a);
                    IntVec h(l + 1, 0);
                    h[p] = 1;
                    h[l] = m;
                    CHECK(restrict_cone(cone_of(family(Family::Bfam, p, l, m, a)), h) ==
                          cone_of(family(Family::Bfam, 0, l - 1, m + a, a)).sorted());
                }
    for (std::size_t l = 2; l <= 3; ++l)
        for (std::size_t p = 1; p <= l; ++p)
            for (Int n = 1; n <= 2; ++n)
                for (Int a = 0; a <= 2; ++a) {
                    IntVec h(l + 1, 0);
                    h[0] = 1;
                    h[l] = n * a;
                    auto e = family(Family::Efam, p, l, 1, a, n);
                    auto next = family(Family::Efam, p - 1, l - 1, 1, a, n + 1);
                    CHECK(restrict_cone(cone_of(e), h) == cone_of(next).sorted());
                }
}

TEST_CASE("family identities") {
    for (Int m = 1; m <= 2; ++m) {
        auto top = family(Family::Hfam, 3, 3, m, 1, 2);
        auto bottom = family(Family::Hfam, 0, 3, m - 1, 1, 2);
        CHECK(build(top).arrangement.sorted() == build(bottom).arrangement.sorted());
        auto etop = family(Family::Efam, 2, 2, m, 1, 1);
        auto ebottom = family(Family::Efam, 0, 2, m - 1, 1, 1);
        CHECK(build(etop).arrangement.sorted() == build(ebottom).arrangement.sorted());
    }
}

TEST_CASE("named affine moves") {
    for (std::size_t l = 2; l <= 3; ++l)
        for (Int a = 1; a <= 2; ++a) {
            auto d = family(Family::Dfam, 0, l, 0, a);
            d.r = l;
            auto c = family(Family::Cfam, 0, l, a, 2 * a);
            CHECK(apply(d_to_c_move(l, a), build(d).arrangement).sorted() == build(c).arrangement.sorted());

            auto dd = family(Family::Dfam, 0, l, 0, a);
            dd.r = l - 1;
            IntVec n(l, 0);
            n[l - 2] = 1;
            n[l - 1] = -1;
            Arrangement da = build(dd).arrangement;
            auto idx = da.index_of(normalize(n, a));
            REQUIRE(idx);
            auto f = family(Family::Ffam, 0, l - 1, 0, a, 0);
            CHECK(apply(d_to_f_move(l, a), restrict(da, *idx)).sorted() == build(f).arrangement.sorted());
        }
}

} // TEST_SUITE
