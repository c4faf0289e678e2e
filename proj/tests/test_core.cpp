#include "arrlab/arrangement.hpp"
#include "arrlab/errors.hpp"
#include "arrlab/poset.hpp"

#include <doctest.h>

using namespace arrlab;

namespace {

Arrangement braid3() {
    return Arrangement(3, {difference_hyperplane(3, 0, 1, 0), difference_hyperplane(3, 0, 2, 0),
                           difference_hyperplane(3, 1, 2, 0)});
}

} // namespace

TEST_SUITE("core") {

TEST_CASE("normalize examples") {
    Hyperplane h = normalize(IntVec{2, -2}, 0);
    CHECK(h.normal == IntVec{1, -1});
    CHECK(h.offset == 0);
    h = normalize(IntVec{-1, 1}, -1);
    CHECK(h.normal == IntVec{1, -1});
    CHECK(h.offset == 1);
    h = normalize(RatVec{Rational(1, 2), 0, 0}, Rational(3, 2));
    CHECK(h.normal == IntVec{1, 0, 0});
    CHECK(h.offset == 3);
    CHECK_THROWS_AS(normalize(IntVec{0, 0}, 1), InputError);
}

TEST_CASE("normalize is idempotent and scale invariant") {
    for (Int s : {1, -1, 3, -7}) {
        Hyperplane h = normalize(IntVec{4 * s, -6 * s, 0}, 10 * s);
        CHECK(h == normalize(h.normal, h.offset));
        CHECK(h == normalize(IntVec{2, -3, 0}, 5));
    }
}

TEST_CASE("cone examples") {
    Arrangement empty2(2);
    Arrangement c = cone(empty2);
    CHECK(c.dim() == 3);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == Hyperplane{{0, 0, 1}, 0});

    Arrangement two(1, {coordinate_hyperplane(1, 0, 0), coordinate_hyperplane(1, 0, 1)});
    Arrangement c2 = cone(two);
    REQUIRE(c2.size() == 3);
    CHECK(c2[0] == Hyperplane{{1, 0}, 0});
    CHECK(c2[1] == Hyperplane{{1, -1}, 0});
    CHECK(c2[2] == Hyperplane{{0, 1}, 0});
    CHECK(c2.is_central());
}

TEST_CASE("restriction examples") {
    Arrangement b = braid3();
    Arrangement r = restrict(b, 0);
    CHECK(r.dim() == 2);
    CHECK(r.size() == 1);
    CHECK(restrict(b, Subspace(3)) == b);
    auto bad = Subspace::solve(3, {coordinate_hyperplane(3, 0, 0)});
    CHECK_THROWS_AS(restrict(b, *bad), InputError);
}

TEST_CASE("localization examples") {
    Arrangement b = braid3();
    CHECK(localize(b, Subspace(3)).empty());
    auto center = meet(b, std::vector<std::size_t>{0, 1});
    REQUIRE(center);
    CHECK(localize(b, center->space).size() == 3);
}

TEST_CASE("essentialize examples") {
    Arrangement e = essentialize(braid3());
    CHECK(e.dim() == 2);
    CHECK(e.size() == 3);
    CHECK(e.rank() == 2);
    CHECK(essentialize(Arrangement(4)).dim() == 0);
}

TEST_CASE("product examples") {
    Arrangement point(1, {coordinate_hyperplane(1, 0, 0)});
    Arrangement boolean2 = product(point, point);
    CHECK(boolean2.size() == 2);
    CHECK(boolean2.rank() == 2);
    Arrangement padded = product(Arrangement(1), braid3());
    CHECK(padded.dim() == 4);
    CHECK(padded.size() == 3);
}

TEST_CASE("strict loader names both indices") {
    std::vector<Hyperplane> hs{coordinate_hyperplane(2, 0, 0), coordinate_hyperplane(2, 1, 0),
                               Hyperplane{{2, 0}, 0}};
    try {
        Arrangement::strict(2, hs);
        FAIL("duplicates accepted");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("0 and 2") != std::string::npos);
    }
}

} // TEST_SUITE
