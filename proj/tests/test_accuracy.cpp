#include "arrlab/accuracy.hpp"
#include "arrlab/deformations.hpp"
#include "arrlab/errors.hpp"

#include <doctest.h>

using namespace arrlab;

namespace {

Arrangement boolean(std::size_t n) {
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < n; ++i)
        hs.push_back(coordinate_hyperplane(n, i, 0));
    return Arrangement(n, hs);
}

Arrangement braid(std::size_t n) {
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            hs.push_back(difference_hyperplane(n, i, j, 0));
    return Arrangement(n, hs);
}

Arrangement shi_cone(const char* base, Int m = 1) {
    DeformationSpec s;
    s.family = Family::ExtShi;
    s.base = base;
    s.m = m;
    return cone(build(s).arrangement);
}

void check_all_witnesses(const Arrangement& a, const AccuracyReport& r) {
    for (const auto& w : r.witnesses) {
        std::string why;
        CAPTURE(witness_kind_name(w.kind));
        CHECK_MESSAGE(check_witness(a, w, &why), why);
    }
}

} // namespace

TEST_SUITE("accuracy") {

TEST_CASE("Boolean arrangement is flag-accurate") {
    Arrangement b = boolean(3);
    auto r = accuracy_profile(b);
    CHECK(r.exponents == IntVec{1, 1, 1});
    CHECK(r.flag == Decision::Yes);
    CHECK(r.accurate == Decision::Yes);
    CHECK(r.almost == Decision::Yes);
    CHECK(r.ind_flag == Decision::Yes);
    CHECK(r.k == 2);
    CHECK(r.coaccuracy == 1);
    REQUIRE(r.witness(WitnessKind::Flag));
    CHECK(r.witness(WitnessKind::Flag)->levels.size() == 3);
    check_all_witnesses(b, r);
}

TEST_CASE("tampered witnesses are rejected") {
    Arrangement b = boolean(3);
    auto w = *flag_accuracy(b);
    REQUIRE(check_witness(b, w));

    // Swap the line for one not inside the plane above it.
    auto bad = w;
    Subspace plane = bad.levels[1].flat;
    for (std::size_t i = 0; i < 3; ++i) {
        auto line = *Subspace(3).meet(coordinate_hyperplane(3, i, 0))->meet(coordinate_hyperplane(3, (i + 1) % 3, 0));
        if (!line.inside(plane)) {
            bad.levels[0].flat = line;
            break;
        }
    }
    std::string why;
    CHECK(!check_witness(b, bad, &why));
    CHECK(why.find("nested") != std::string::npos);

    bad = w;
    bad.levels[1].exponents = {1, 2};
    CHECK(!check_witness(b, bad));
    bad = w;
    bad.levels.pop_back();
    CHECK(!check_witness(b, bad));
    bad = w;
    bad.levels[0].flat = Subspace(3);
    CHECK(!check_witness(b, bad));
}

TEST_CASE("braid arrangements have a nonzero center") {
    Arrangement a = braid(4);
    auto r = accuracy_profile(a);
    CHECK(r.exponents == IntVec{0, 1, 2, 3});
    CHECK(r.flag == Decision::Yes);
    CHECK(r.k == 3);
    const auto* w = r.witness(WitnessKind::Flag);
    REQUIRE(w);
    CHECK(w->levels.front().flat.dim() == 1);
    check_all_witnesses(a, r);
}

TEST_CASE("rank two is flag-accurate") {
    std::vector<Hyperplane> hs;
    for (IntVec n : {IntVec{1, 0}, IntVec{0, 1}, IntVec{1, 1}, IntVec{1, 2}, IntVec{2, 3}})
        hs.push_back(normalize(n, 0));
    Arrangement a(2, hs);
    auto r = accuracy_profile(a);
    CHECK(r.exponents == IntVec{1, 4});
    CHECK(r.flag == Decision::Yes);
    CHECK(r.coaccuracy == 1);
    check_all_witnesses(a, r);
}

TEST_CASE("extended Shi cones carry simple-root witnesses") {
    for (const char* base : {"A2", "B2", "A3"}) {
        CAPTURE(base);
        Arrangement c = shi_cone(base);
        auto r = accuracy_profile(c);
        CHECK(r.flag == Decision::Yes);
        check_all_witnesses(c, r);
        auto w = simple_root_witness(c, build_root_system(base));
        REQUIRE(w);
        CHECK(w->cuts.size() == build_root_system(base).rank - 1);
        std::string why;
        CHECK_MESSAGE(check_witness(c, *w, &why), why);
    }
    CHECK_THROWS_AS(simple_root_witness(shi_cone("A2"), build_root_system("A3")), InputError);
}

TEST_CASE("products of flag-accurate arrangements") {
    Arrangement p = product(shi_cone("A2"), boolean(2));
    auto r = accuracy_profile(p);
    CHECK(r.flag == Decision::Yes);
    CHECK(*r.k + *r.coaccuracy == p.dim());
    check_all_witnesses(p, r);
}

TEST_CASE("witness from explicit cuts") {
    Arrangement b = boolean(3);
    auto w = witness_from_cuts(b, {coordinate_hyperplane(3, 2, 0)});
    REQUIRE(w);
    CHECK(w->levels[1].flat == *Subspace(3).meet(coordinate_hyperplane(3, 2, 0)));
    CHECK(check_witness(b, *w));
    CHECK(!witness_from_cuts(b, {difference_hyperplane(3, 0, 1, 0)}));
}

TEST_CASE("non-central input and asserted exponents") {
    DeformationSpec s;
    s.family = Family::ExtShi;
    s.base = "A2";
    CHECK_THROWS_AS(accuracy_profile(build(s).arrangement), InputError);
    CHECK_THROWS_AS(accuracy_profile(boolean(2), {}, IntVec{1, 2}), InputError);
    auto r = accuracy_profile(boolean(2), {}, IntVec{1, 1});
    CHECK(r.exponent_source == "asserted");
}

TEST_CASE("intermediate arrangements: lattice agrees with the type recursion") {
    for (std::size_t l = 2; l <= 4; ++l)
        for (std::size_t k = 0; k <= l; ++k) {
            CAPTURE(l);
            CAPTURE(k);
            Arrangement a = intermediate_arrangement_r2(k, l);
            auto w = flag_accuracy(a);
            CHECK(w.has_value() == intermediate_flag_accurate({k, l, 2}));
        }
}

} // TEST_SUITE
