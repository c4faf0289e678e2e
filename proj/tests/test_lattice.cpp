#include "arrlab/poset.hpp"

#include <doctest.h>

using namespace arrlab;

TEST_SUITE("lattice") {

TEST_CASE("boolean 2-arrangement poset") {
    Arrangement b(2, {coordinate_hyperplane(2, 0, 0), coordinate_hyperplane(2, 1, 0)});
    auto p = IntersectionPoset::build(b);
    REQUIRE(p.size() == 4);
    CHECK(p.mobius(0) == 1);
    CHECK(p.mobius(1) == -1);
    CHECK(p.mobius(2) == -1);
    CHECK(p.mobius(3) == 1);
}

TEST_CASE("braid K3 poset and chi") {
    Arrangement b(3, {difference_hyperplane(3, 0, 1, 0), difference_hyperplane(3, 0, 2, 0),
                      difference_hyperplane(3, 1, 2, 0)});
    auto p = IntersectionPoset::build(b);
    REQUIRE(p.size() == 5);
    CHECK(p.mobius(4) == 2);
    CHECK(p.char_poly() == Polynomial::from_roots({0, 1, 2}));
}

TEST_CASE("parallel points") {
    Arrangement a(1, {coordinate_hyperplane(1, 0, 0), coordinate_hyperplane(1, 0, 1)});
    auto p = IntersectionPoset::build(a);
    CHECK(p.size() == 3);
    CHECK(p.char_poly() == Polynomial({-2, 1}));
    CHECK(char_poly_via_cone(a) == p.char_poly());
}

TEST_CASE("empty arrangement") {
    CHECK(char_poly(Arrangement(3)) == Polynomial::monomial(3));
}

} // TEST_SUITE
