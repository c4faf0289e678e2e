#include "arrlab/descendants.hpp"
#include "arrlab/errors.hpp"
#include "arrlab/poset.hpp"
#include "arrlab/properties.hpp"

#include <doctest.h>

using namespace arrlab;

namespace {

void check_green(const PropertyReport& r) {
    CAPTURE(r.name);
    CHECK(r.cases > 0);
    for (const auto& f : r.failures)
        FAIL_CHECK(f);
}

} // namespace

TEST_SUITE("properties") {

TEST_CASE("random arrangements are reproducible") {
    std::mt19937_64 a(7), b(7);
    for (int i = 0; i < 20; ++i)
        CHECK(random_arrangement(a) == random_arrangement(b));
    std::mt19937_64 c(1);
    RandomArrangementOptions central{3, 6, 1, true};
    for (int i = 0; i < 20; ++i)
        CHECK(random_arrangement(c, central).is_central());
}

TEST_CASE("coning identity") { check_green(check_coning_identity(200, 1)); }

TEST_CASE("Terao factorization") { check_green(check_terao_factorization(120, 2)); }

TEST_CASE("addition-deletion bookkeeping") { check_green(check_addition_deletion(60, 3)); }

TEST_CASE("witness replay determinism") { check_green(check_witness_determinism(40, 4)); }

TEST_CASE("mutation chi-invariance along descendant rows") { check_green(check_mutation_rows(3)); }

TEST_CASE("N-Ish witnesses") {
    auto w = nish_witness({{-1, 0, 1}, {0}, {0, 1}});
    REQUIRE(w);
    CHECK(nish_cuts({{-1, 0, 1}, {0}, {0, 1}}).size() == 2);
    CHECK(!nish_witness({{0, 1}, {0, 1}}));
    CHECK(nish_cuts({{1}, {2}}).empty());
}

TEST_CASE("property registry") {
    for (auto name : property_names())
        CHECK(run_property(name, 3, 9).name == name);
    CHECK_THROWS_AS(run_property("no-such", 1, 1), InputError);
}

}
