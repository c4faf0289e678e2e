#include "arrlab/errors.hpp"
#include "arrlab/freeness.hpp"

#include <doctest.h>

#include <random>

using namespace arrlab;

namespace {

Arrangement braid_shift(std::size_t n, const std::vector<Int>& shifts) {
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (Int c : shifts)
                hs.push_back(difference_hyperplane(n, i, j, c));
    return Arrangement(n, hs);
}

Arrangement linear(std::size_t dim, const std::vector<IntVec>& normals) {
    std::vector<Hyperplane> hs;
    for (const auto& n : normals)
        hs.push_back(normalize(n, 0));
    return Arrangement(dim, hs);
}

void check_replays(const FreenessVerdict& v) {
    REQUIRE(certified(v));
    auto r = replay(*certificate_of(v));
    CHECK_MESSAGE(r.ok, r.message);
}

} // namespace

TEST_SUITE("freeness") {

TEST_CASE("empty arrangement has zero exponents") {
    auto v = certify_free(Arrangement(3));
    REQUIRE(certified(v));
    CHECK(certificate_of(v)->exponents == IntVec{0, 0, 0});
    check_replays(v);
}

TEST_CASE("cone of the Catalan arrangement of A2") {
    Arrangement c = canonical_form(cone(braid_shift(3, {-1, 0, 1})));
    REQUIRE(c.dim() == 3);
    auto v = inductively_free(c);
    REQUIRE(certified(v));
    CHECK(certificate_of(v)->exponents == IntVec{1, 4, 5});
    check_replays(v);
}

TEST_CASE("four-cycle is not free") {
    Arrangement c4(4, {difference_hyperplane(4, 0, 1, 0), difference_hyperplane(4, 1, 2, 0),
                       difference_hyperplane(4, 2, 3, 0), difference_hyperplane(4, 3, 0, 0)});
    CHECK(std::holds_alternative<NotFree>(certify_free(c4)));
    CHECK(!exponents(c4));
}

TEST_CASE("divisional flags") {
    check_replays(divisionally_free(linear(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    auto pencil = linear(2, {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}});
    auto v = divisionally_free(pencil);
    check_replays(v);
    CHECK(certificate_of(v)->exponents == IntVec{1, 4});
    auto shi = divisionally_free(cone(braid_shift(3, {0, 1})));
    check_replays(shi);
    CHECK(certificate_of(shi)->exponents == IntVec{0, 1, 3, 3});
}

TEST_CASE("MAT partitions by root height") {
    auto a2 = linear(2, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(verify_mat_partition(a2, {{{0, 1}, {2}}}) == IntVec{1, 2});
    // B2 with simple roots e1-e2, e2
    auto b2 = linear(2, {{1, -1}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(verify_mat_partition(b2, {{{0, 1}, {2}, {3}}}) == IntVec{1, 3});
    auto boolean = linear(2, {{1, 0}, {0, 1}});
    CHECK(!verify_mat_partition(boolean, {{{0}, {1}}}));
    CHECK_THROWS_AS(verify_mat_partition(boolean, {{{0}}}), InputError);

    auto found = mat_free_search(b2);
    REQUIRE(found.outcome == MatSearch::Outcome::Found);
    CHECK(verify_mat_partition(b2, found.partition) == IntVec{1, 3});
    check_replays(certify_free(b2, Method::MAT));
}

TEST_CASE("recursive derivation with an addition pool") {
    // deleting from A3 and adding it back is the smallest exercise of the Add step
    Arrangement a = braid_shift(3, {0});
    auto pool = std::vector<Hyperplane>{normalize(IntVec{1, 1, -2}, 0)};
    auto v = recursively_free(a, pool, 1);
    check_replays(v);
    CHECK(certificate_of(v)->exponents == IntVec{0, 1, 2});
}

TEST_CASE("tampered certificates fail replay") {
    auto v = inductively_free(canonical_form(cone(braid_shift(3, {-1, 0, 1}))));
    REQUIRE(certified(v));
    FreenessCertificate c = *certificate_of(v);
    c.exponents = {1, 3, 6};
    CHECK(!replay(c).ok);
    auto d = divisionally_free(linear(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    FreenessCertificate f = *certificate_of(d);
    std::get<DivisionalFlag>(f.derivation).flats.pop_back();
    CHECK(!replay(f).ok);
}

TEST_CASE("supersolvable implies inductive with the same exponents") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<Int> coef(-1, 1);
    int supersolvable_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<IntVec> normals;
        std::size_t n = 3 + trial % 5;
        while (normals.size() < n) {
            IntVec v{coef(rng), coef(rng), coef(rng)};
            if (v != IntVec{0, 0, 0})
                normals.push_back(v);
        }
        Arrangement a = linear(3, normals);
        auto ss = supersolvable_free(a);
        auto ind = inductively_free(a);
        if (certified(ss)) {
            ++supersolvable_seen;
            REQUIRE(certified(ind));
            CHECK(certificate_of(ss)->exponents == certificate_of(ind)->exponents);
            check_replays(ss);
            check_replays(ind);
        }
        if (certified(ind)) {
            auto df = divisionally_free(a);
            check_replays(df);
        }
    }
    CHECK(supersolvable_seen > 10);
}

} // TEST_SUITE
