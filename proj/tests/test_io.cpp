#include "arrlab/errors.hpp"
#include "arrlab/io.hpp"

#include <doctest.h>

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

// Serialize, parse the text back, and check that a second dump gives the same bytes.
Json through_text(const Json& j) {
    Json back = Json::parse(dump(j));
    CHECK(dump(back) == dump(j));
    return back;
}

void round_trip(const FreenessVerdict& v) {
    REQUIRE(certified(v));
    const FreenessCertificate& c = *certificate_of(v);
    FreenessCertificate back = certificate_from_json(through_text(to_json(c)));
    CHECK(back.kind() == c.kind());
    CHECK(back.exponents == c.exponents);
    CHECK(back.arrangement == c.arrangement);
    auto r = replay(back);
    CHECK_MESSAGE(r.ok, r.message);
    CHECK(dump(to_json(back)) == dump(to_json(c)));
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("arrangement documents") {
    Arrangement a = braid_shift(3, {0, 1});
    Json j = to_json(a);
    CHECK(j["schema"] == kSchema);
    CHECK(j["dim"] == 3);
    CHECK(arrangement_from_json(through_text(j)) == a);

    SUBCASE("canonical form on load") {
        Json raw = Json::parse(R"({"dim": 2, "hyperplanes": [{"normal": [-2, 4], "offset": 6}]})");
        Arrangement b = arrangement_from_json(raw);
        CHECK(b[0].normal == IntVec{1, -2});
        CHECK(b[0].offset == -3);
    }
    SUBCASE("duplicates name both indices") {
        Json raw = Json::parse(
            R"({"dim": 2, "hyperplanes": [{"normal": [1, 0], "offset": 1}, {"normal": [0, 1], "offset": 0},
                                         {"normal": [2, 0], "offset": 2}]})");
        try {
            arrangement_from_json(raw);
            FAIL("duplicate accepted");
        } catch (const InputError& e) {
            std::string what = e.what();
            CHECK(what.find('0') != std::string::npos);
            CHECK(what.find('2') != std::string::npos);
        }
    }
    SUBCASE("shape errors") {
        CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"dim": 2})")), InputError);
        CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"dim": 2, "hyperplanes": [{"normal": [1]}]})")),
                        InputError);
        CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"dim": 1, "hyperplanes": [{"normal": [0]}]})")),
                        InputError);
        CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"schema": "arrlab/0", "dim": 1, "hyperplanes": []})")),
                        InputError);
        CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"dim": "x", "hyperplanes": []})")), InputError);
    }
}

TEST_CASE("polynomials carry their roots") {
    Json j = to_json(Polynomial::from_roots({1, 2, 2}));
    CHECK(j["roots"] == Json::array({1, 2, 2}));
    CHECK(polynomial_from_json(j) == Polynomial::from_roots({1, 2, 2}));
    CHECK(to_json(Polynomial(IntVec{1, 0, 1}))["roots"].is_null());
}

TEST_CASE("every certificate kind round-trips and replays") {
    Arrangement shi = cone(braid_shift(3, {0, 1}));
    round_trip(supersolvable_free(braid_shift(4, {0})));
    round_trip(inductively_free(canonical_form(cone(braid_shift(3, {-1, 0, 1})))));
    round_trip(divisionally_free(shi));
    round_trip(certify_free(braid_shift(4, {0}), Method::MAT));
    round_trip(recursively_free(braid_shift(3, {0}), {normalize(IntVec{1, 1, -2}, 0)}, 1));
}

TEST_CASE("shared derivation nodes are written once") {
    auto v = inductively_free(canonical_form(cone(braid_shift(4, {0, 1}))));
    REQUIRE(certified(v));
    Json j = to_json(*certificate_of(v));
    const Json& nodes = j["derivation"]["nodes"];
    CHECK(j["derivation"]["root"] == nodes.size() - 1);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (const char* key : {"first", "restriction"})
            if (nodes[i].contains(key))
                CHECK(nodes[i][key].get<std::size_t>() < i);
}

TEST_CASE("tampered certificate files fail replay or load") {
    auto v = supersolvable_free(braid_shift(4, {0}));
    REQUIRE(certified(v));
    Json j = to_json(*certificate_of(v));

    Json bad = j;
    bad["exponents"][2] = 99;
    CHECK_FALSE(replay(certificate_from_json(bad)).ok);

    bad = j;
    bad["kind"] = "telepathic";
    CHECK_THROWS_AS(certificate_from_json(bad), InputError);

    bad = j;
    bad["type"] = "graph";
    CHECK_THROWS_AS(certificate_from_json(bad), InputError);
}

TEST_CASE("witnesses round-trip and recheck") {
    Arrangement a = cone(braid_shift(3, {0, 1}));
    auto w = flag_accuracy(a);
    REQUIRE(w);
    Json j = through_text(to_json(*w));
    CHECK(j["flats"].size() == j["exponents_per_level"].size());
    CHECK(j["flats"][0].contains("dim"));
    CHECK(j["flats"][0].contains("equations"));
    AccuracyWitness back = witness_from_json(j, a.dim());
    CHECK(back.levels.size() == w->levels.size());
    std::string why;
    CHECK_MESSAGE(check_witness(a, back, &why), why);

    j["exponents_per_level"][0][0] = 7;
    CHECK_FALSE(check_witness(a, witness_from_json(j, a.dim())));
    j["flats"][0]["dim"] = 42;
    CHECK_THROWS_AS(witness_from_json(j, a.dim()), InputError);
}

TEST_CASE("accuracy reports") {
    Json j = to_json(accuracy_profile(cone(braid_shift(3, {0, 1}))));
    CHECK(j["type"] == "accuracy-report");
    CHECK(j["flag"] == "yes");
    CHECK(j["exponents"] == Json::array({0, 1, 3, 3}));
}

TEST_CASE("graphs and digraphs") {
    SimpleGraph g = build_sun(3);
    CHECK(graph_from_json(through_text(to_json(g))) == g);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1], [1, 0]]})")), InputError);

    WeightedDigraph d;
    d.n = 3;
    d.arcs = {{1, 0}};
    d.weights = {VertexWeight::interval(-1, 1), VertexWeight::set({0, 2}), VertexWeight{}};
    Json j = through_text(to_json(d));
    CHECK(j["weights"]["0"] == Json::array({-1, 1}));
    CHECK(j["weights"]["1"] == Json::array({Json::array({0, 2})}));
    CHECK(digraph_from_json(j) == d);
    CHECK_THROWS_AS(digraph_from_json(Json::parse(R"({"n": 1, "weights": {"0": [2, 1]}})")), InputError);
    CHECK_THROWS_AS(digraph_from_json(Json::parse(R"({"n": 1, "weights": {"x": [1, 1]}})")), InputError);
}

TEST_CASE("constructor specs") {
    DeformationSpec s;
    s.family = Family::Bfam;
    s.p = 0;
    s.l = 2;
    s.m = 2;
    s.a = 1;
    DeformationSpec back = deformation_from_json(through_text(to_json(s)));
    CHECK(to_string(back) == to_string(s));
    CHECK(build(back).arrangement == build(s).arrangement);
    CHECK_THROWS_AS(deformation_from_json(Json::parse(R"({"family": "zfam"})")), InputError);

    DescendantSpec d{Genealogy::Catalan, 3, 1, 2, 0, 0, 1, true};
    DescendantSpec dback = descendant_from_json(through_text(to_json(d)));
    CHECK(to_string(dback) == to_string(d));
    CHECK_THROWS_AS(descendant_from_json(Json::parse(R"({"genealogy": "shi", "l": 2, "k": 5})")), InputError);
}

TEST_CASE("row reports") {
    DescendantSpec s{Genealogy::Shi, 2, 0, 1, 0, 0, 1, false};
    Json j = to_json(validate_row(s));
    CHECK(j["ok"] == true);
    CHECK(j["cells"].size() == 2);
    CHECK(j["cells"][0]["chi"]["roots"].is_array());
}

}
