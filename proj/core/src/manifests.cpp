#include "arrlab/errors.hpp"
#include "arrlab/experiments.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace arrlab {

namespace {

// Cone exponents (0^{ambient - rank}, 1, values), sorted.
IntVec cone_exponents(const RootSystem& phi, IntVec values) {
    IntVec e(phi.ambient - phi.rank, 0);
    e.push_back(1);
    e.insert(e.end(), values.begin(), values.end());
    std::sort(e.begin(), e.end());
    return e;
}

Job job(std::string name, int criterion, std::string kind, Json params, Json expect, std::string title = "") {
    Job j;
    j.name = std::move(name);
    j.criterion = criterion;
    j.kind = std::move(kind);
    j.params = std::move(params);
    j.expect = std::move(expect);
    j.title = std::move(title);
    return j;
}

Json property(const char* name, std::size_t count, std::uint64_t seed) {
    return Json{{"name", name}, {"count", count}, {"seed", seed}};
}

Manifest desk_scale() {
    Manifest m;
    m.name = "desk-scale";
    m.output = "out/desk-scale";

    Json coning = property("coning-identity", 200, 1);
    coning["max_dim"] = 4;
    coning["max_hyperplanes"] = 10;
    m.jobs.push_back(job("coning-identity", 1, "property", coning, {{"ok", true}, {"cases", 200}},
                         "chi(cA) = (t - 1) chi(A) on random arrangements"));

    for (const char* base : {"A2", "A3", "B2", "G2"})
        for (Int mult : {1, 2}) {
            RootSystem phi = build_root_system(base);
            Json spec{{"family", "extshi"}, {"base", base}, {"m", mult}};
            IntVec shi(phi.rank, mult * phi.coxeter_number);
            m.jobs.push_back(job(fmt::format("shi-{}-m{}", base, mult), 2, "deform",
                                 {{"spec", spec}, {"witness", "simple-root"}},
                                 {{"exponents", cone_exponents(phi, shi)}, {"witness", {{"ok", true}}}},
                                 "cone of Shi^m: exponents (1, (mh)^l) and a simple-root witness"));
        }

    for (const char* base : {"A2", "A3"})
        for (Int mult : {0, 1, 2}) {
            RootSystem phi = build_root_system(base);
            IntVec cat;
            for (Int e : phi.exponents())
                if (e > 0)
                    cat.push_back(mult * phi.coxeter_number + e);
            Json spec{{"family", "extcat"}, {"base", base}, {"m", mult}};
            m.jobs.push_back(job(fmt::format("cat-{}-m{}", base, mult), 3, "deform", {{"spec", spec}, {"witness", "cat"}},
                                 {{"exponents", cone_exponents(phi, cat)}, {"witness", {{"ok", true}}}},
                                 "cone of Cat^m: exponents (1, mh + e_i), witness along simple roots"));
        }
    for (const char* family : {"bfam", "cfam"})
        for (Int mult = 0; mult <= 2; ++mult)
            for (Int a = 0; a <= 2; ++a) {
                const Int l = 2;
                IntVec e{1};
                for (Int i = 1; i <= l; ++i)
                    e.push_back(2 * mult + 2 * a * l - 2 * a + 2 * i - 1);
                Json spec{{"family", family}, {"p", 0}, {"l", l}, {"m", mult}, {"a", a}};
                m.jobs.push_back(job(fmt::format("{}-p0-l2-m{}-a{}", family, mult, a), 3, "deform",
                                     {{"spec", spec}, {"witness", "bc"}, {"free", true}},
                                     {{"exponents", e}, {"witness", {{"ok", true}}}, {"free", {{"verdict", "free"}}}},
                                     "B/C family at p = 0: exponents (1, 2m + 2al - 2a + 2i - 1)"));
            }

    m.jobs.push_back(job("graph-not-accurate", 4, "graph",
                         {{"graph", {{"builder", "example-not-accurate"}}}, {"checks", {"chordal", "free", "accuracy"}}},
                         {{"chordal", true}, {"free", true}, {"accuracy", {{"accurate", "no"}}}},
                         "chordal graph on 10 vertices: free, not accurate"));
    m.jobs.push_back(job("graph-not-accurate-extended", 4, "graph",
                         {{"graph", {{"builder", "example-not-accurate-extended"}}}, {"checks", {"chordal", "accuracy"}}},
                         {{"exponents", {0, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3}}, {"accuracy", {{"flag", "yes"}}}},
                         "its 11-vertex extension: flag-accurate, exp (0, 1, 2^6, 3^3)"));
    for (std::size_t k : {1, 2}) {
        IntVec e{0, 1};
        e.insert(e.end(), 6 * k + 1, 2);
        e.insert(e.end(), k + 1, 3);
        m.jobs.push_back(job(fmt::format("graph-q4-ext-k{}", k), 4, "graph",
                             {{"graph", {{"builder", "q4-ext"}, {"k", k}}}, {"checks", {"chordal", "accuracy"}}},
                             {{"exponents", e}, {"accuracy", {{"coaccuracy", k + 1}}}},
                             "Q4-ext(k): exactly (k+1)-coaccurate"));
    }
    for (auto weights : {std::vector<Int>(6, 1), std::vector<Int>{1, 2, 1, 2, 1, 2}}) {
        m.jobs.push_back(job(fmt::format("graph-q4-w{}", fmt::join(weights, "")), 4, "graph",
                             {{"graph", {{"builder", "q"}, {"l", 4}, {"weights", weights}}},
                              {"checks", {"chordal", "accuracy"}}},
                             {{"chordal", true}, {"accuracy", {{"accurate", "no"}, {"flag", "no"}}}},
                             "Q4 with positive weights is not accurate"));
    }

    for (std::size_t n : {3, 4})
        m.jobs.push_back(job(fmt::format("sun-{}", n), 5, "graph",
                             {{"graph", {{"builder", "sun"}, {"n", n}}}, {"checks", {"chordal", "strong", "accuracy"}}},
                             {{"strong", false}, {"accuracy", {{"flag", "yes"}}}},
                             "suns: flag-accurate, not strongly chordal"));

    m.jobs.push_back(job("graph-sweep-6", 6, "graph-sweep", {{"max_n", 6}},
                         {{"graphs", 208}, {"free_mismatches", Json::array()}, {"mat_mismatches", Json::array()}},
                         "free iff chordal, MAT iff strongly chordal"));

    for (auto [type, count] : {std::pair<const char*, int>{"A3", 14}, {"B3", 20}, {"B2", 6}})
        m.jobs.push_back(job(fmt::format("ideals-{}", type), 7, "ideals", {{"type", type}},
                             {{"ideals", count}, {"mat_verified", count}, {"flag_accurate", count}},
                             "every order ideal: MAT partition and flag-accuracy"));

    for (auto [mult, d] : {std::pair<Int, Int>{0, 0}, {1, 0}})
        m.jobs.push_back(job(fmt::format("shi-matrix-l3-m{}-d{}", mult, d), 8, "descend",
                             {{"genealogy", "shi"}, {"l", 3}, {"m", mult}, {"d", d}},
                             {{"ok", true}, {"failures", Json::array()}},
                             "Shi descendant matrix: exponents, ind-flag witnesses, replay"));
    m.jobs.push_back(job("catalan-matrix-l2-c1-m0", 8, "descend", {{"genealogy", "catalan"}, {"l", 2}, {"c", 1}, {"m", 0}},
                         {{"ok", true}, {"failures", Json::array()}},
                         "Catalan descendant matrix: exponents, ind-flag witnesses, replay"));

    m.jobs.push_back(job("nish-nested", 9, "nish",
                         {{"count", 50}, {"seed", 9}, {"max_l", 4}, {"lo", -3}, {"hi", 3}, {"nested", true}},
                         {{"ok", true}, {"failures", Json::array()}},
                         "strictly nested N-Ish: supersolvable, nested exponents, ind-flag witness"));
    m.jobs.push_back(job("nish-unnested", 9, "nish",
                         {{"count", 50}, {"seed", 10}, {"max_l", 4}, {"lo", -3}, {"hi", 3}, {"nested", false}},
                         {{"ok", true}, {"failures", Json::array()}}, "non-nested N-Ish: not free-certified"));

    m.jobs.push_back(job("terao-factorization", 10, "property", property("terao-factorization", 200, 2), {{"ok", true}}));
    m.jobs.push_back(job("addition-deletion", 10, "property", property("addition-deletion", 200, 3), {{"ok", true}}));
    m.jobs.push_back(job("witness-determinism", 10, "property", property("witness-determinism", 100, 4), {{"ok", true}}));
    Json rows = property("mutation-rows", 0, 0);
    rows["max_l"] = 3;
    m.jobs.push_back(job("mutation-rows", 10, "property", rows, {{"ok", true}}));
    return m;
}

} // namespace

std::vector<std::string_view> builtin_manifest_names() { return {"desk-scale"}; }

Manifest builtin_manifest(std::string_view name) {
    if (name == "desk-scale")
        return desk_scale();
    throw InputError(fmt::format("no bundled manifest named '{}'", name));
}

} // namespace arrlab
