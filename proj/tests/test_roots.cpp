#include "arrlab/errors.hpp"
#include "arrlab/poset.hpp"
#include "arrlab/roots.hpp"

#include <doctest.h>

#include <set>

using namespace arrlab;

namespace {

// Brute force: subsets closed under "beta <= alpha iff alpha - beta has nonnegative coefficients".
std::size_t brute_ideal_count(const RootSystem& phi) {
    std::size_t n = phi.size(), count = 0;
    auto leq = [&](std::size_t b, std::size_t a) {
        for (std::size_t i = 0; i < phi.rank; ++i)
            if (phi.coefficients[b][i] > phi.coefficients[a][i])
                return false;
        return true;
    };
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            if (mask >> a & 1)
                for (std::size_t b = 0; b < n && ok; ++b)
                    if (leq(b, a) && !(mask >> b & 1))
                        ok = false;
        count += ok;
    }
    return count;
}

} // namespace

TEST_SUITE("roots") {

TEST_CASE("root counts, Coxeter numbers and exponents") {
    struct Row {
        const char* label;
        std::size_t positive;
        int h;
        IntVec exps;
    };
    for (const auto& row : std::vector<Row>{
             {"A1", 1, 2, {1}},
             {"A2", 3, 3, {1, 2}},
             {"A3", 6, 4, {1, 2, 3}},
             {"A4", 10, 5, {1, 2, 3, 4}},
             {"B2", 4, 4, {1, 3}},
             {"B3", 9, 6, {1, 3, 5}},
             {"B4", 16, 8, {1, 3, 5, 7}},
             {"C3", 9, 6, {1, 3, 5}},
             {"C4", 16, 8, {1, 3, 5, 7}},
             {"D4", 12, 6, {1, 3, 3, 5}},
             {"G2", 6, 6, {1, 5}},
             {"F4", 24, 12, {1, 5, 7, 11}},
             {"E6", 36, 12, {1, 4, 5, 7, 8, 11}},
             {"E7", 63, 18, {1, 5, 7, 9, 11, 13, 17}},
             {"E8", 120, 30, {1, 7, 11, 13, 17, 19, 23, 29}},
         }) {
        CAPTURE(row.label);
        RootSystem phi = build_root_system(row.label);
        CHECK(phi.size() == row.positive);
        CHECK(phi.coxeter_number == row.h);
        CHECK(phi.exponents() == row.exps);
        for (std::size_t i = 0; i < phi.rank; ++i)
            CHECK(phi.heights[i] == 1);
    }
}

TEST_CASE("A2 heights and simple roots") {
    RootSystem a2 = build_root_system("A2");
    CHECK(a2.heights == std::vector<int>{1, 1, 2});
    CHECK(a2.roots[0] == IntVec{1, -1, 0});
    CHECK(a2.roots[1] == IntVec{0, 1, -1});
    CHECK(a2.roots[2] == IntVec{1, 0, -1});
    CHECK(a2.hyperplane(0, 1) == difference_hyperplane(3, 0, 1, 1));
}

TEST_CASE("F4 follows the Bourbaki labelling") {
    RootSystem f4 = build_root_system("F4");
    CHECK(f4.denominator == 2);
    CHECK(f4.roots[0] == IntVec{0, 2, -2, 0});
    CHECK(f4.roots[3] == IntVec{1, -1, -1, -1});
    CHECK(f4.hyperplane(3) == normalize(IntVec{1, -1, -1, -1}, 0));
}

TEST_CASE("bad labels") {
    CHECK_THROWS_AS(build_root_system("X3"), InputError);
    CHECK_THROWS_AS(build_root_system("D3"), InputError);
    CHECK_THROWS_AS(build_root_system("A"), InputError);
    CHECK_THROWS_AS(build_root_system("G3"), InputError);
}

TEST_CASE("ideal counts match brute force") {
    struct Row {
        const char* label;
        std::size_t count;
    };
    for (const auto& row : std::vector<Row>{{"A2", 5}, {"B2", 6}, {"G2", 8}, {"A3", 14}, {"B3", 20}, {"C3", 20}, {"D4", 50}}) {
        CAPTURE(row.label);
        RootSystem phi = build_root_system(row.label);
        auto ideals = all_ideals(phi);
        CHECK(ideals.size() == row.count);
        CHECK(brute_ideal_count(phi) == row.count);
        CHECK(ideals.front().empty());
        std::set<OrderIdeal> distinct(ideals.begin(), ideals.end());
        CHECK(distinct.size() == ideals.size());
        for (const auto& i : ideals)
            CHECK(is_ideal(phi, i));
    }
    CHECK(all_ideals(build_root_system("F4")).size() == 105);
}

TEST_CASE("streaming stops on request") {
    RootSystem b3 = build_root_system("B3");
    std::size_t seen = 0;
    CHECK(enumerate_ideals(b3, [&](const OrderIdeal&) { return ++seen < 7; }) == 7);
}

TEST_CASE("ideal arrangements carry MAT partitions") {
    RootSystem a2 = build_root_system("A2");
    auto full = ideal_arrangement(a2, {0, 1, 2});
    CHECK(verify_mat_partition(full.arrangement, full.partition) == IntVec{0, 1, 2});
    CHECK(ideal_arrangement(a2, {}).arrangement.empty());
    CHECK_THROWS_AS(ideal_arrangement(a2, {2}), InputError);

    RootSystem a3 = build_root_system("A3");
    auto simples = ideal_arrangement(a3, {0, 1, 2});
    CHECK(verify_mat_partition(simples.arrangement, simples.partition) == IntVec{0, 1, 1, 1});

    for (const char* label : {"B3", "A3", "G2", "C3"}) {
        RootSystem phi = build_root_system(label);
        enumerate_ideals(phi, [&](const OrderIdeal& i) {
            auto ia = ideal_arrangement(phi, i);
            for (std::size_t b = 1; b < ia.partition.blocks.size(); ++b)
                CHECK(ia.partition.blocks[b].size() <= ia.partition.blocks[b - 1].size());
            if (ia.partition.blocks.size() > 1)
                CHECK(ia.partition.blocks[0].size() > ia.partition.blocks[1].size());
            auto e = verify_mat_partition(ia.arrangement, ia.partition);
            REQUIRE(e);
            CHECK(Polynomial::from_roots(*e) == char_poly(ia.arrangement));
            return true;
        });
    }
}

TEST_CASE("Weyl arrangement exponents equal the dual partition") {
    for (const char* label : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        CAPTURE(label);
        RootSystem phi = build_root_system(label);
        Arrangement w = weyl_arrangement(phi);
        CHECK(char_poly(w) == Polynomial::from_roots(pad_exponents(phi.exponents(), phi.ambient)));
    }
}

TEST_CASE("intermediate exponents") {
    CHECK(intermediate_expected_exponents({1, 3, 3}) == IntVec{1, 4, 5});
    CHECK(intermediate_expected_exponents({0, 3, 2}) == IntVec{1, 2, 3});
    CHECK(intermediate_expected_exponents({4, 4, 5}).back() == 3 * 5 + 1);
    CHECK_THROWS_AS(intermediate_expected_exponents({4, 3, 2}), InputError);
    for (std::size_t l = 2; l <= 4; ++l)
        for (std::size_t k = 0; k <= l; ++k) {
            CAPTURE(k);
            CAPTURE(l);
            Arrangement a = intermediate_arrangement_r2(k, l);
            CHECK(char_poly(a) == Polynomial::from_roots(intermediate_expected_exponents({k, l, 2})));
        }
}

TEST_CASE("intermediate flag-accuracy follows the r + k >= l rule") {
    CHECK(intermediate_flag_accurate({1, 4, 3}));
    CHECK(!intermediate_flag_accurate({1, 5, 3}));
    for (std::size_t l = 2; l <= 8; ++l)
        for (std::size_t k = 1; k < l; ++k) {
            CHECK(intermediate_flag_accurate({k, l, 2}));
            for (std::size_t r = 3; r <= 7; ++r)
                CHECK(intermediate_flag_accurate({k, l, r}) == (r + k >= l));
        }
    for (std::size_t l = 2; l <= 6; ++l)
        for (std::size_t r = 2; r <= 5; ++r)
            CHECK(intermediate_flag_accurate({l, l, r}));
}

} // TEST_SUITE
