#include "arrlab/io.hpp"

#include "arrlab/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <unordered_map>

namespace arrlab {

namespace {

template <class F>
auto guarded(std::string_view what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(fmt::format("malformed {} JSON: {}", what, e.what()));
    }
}

std::size_t index_field(const Json& j, const char* key) {
    Int v = j.at(key).get<Int>();
    if (v < 0)
        throw InputError(fmt::format("field '{}' must be nonnegative", key));
    return static_cast<std::size_t>(v);
}

Json exponents_json(const Exponents& e) { return Json(e); }

std::size_t node_table(const DerivationRef& root, Json& nodes) {
    std::unordered_map<const DerivationNode*, std::size_t> ids;
    // Post-order, so children always precede their parent.
    auto visit = [&](auto&& self, const DerivationNode* n) -> std::size_t {
        if (auto it = ids.find(n); it != ids.end())
            return it->second;
        Json j;
        j["exponents"] = exponents_json(n->exponents);
        switch (n->step) {
        case DerivationNode::Step::Leaf:
            j["step"] = "leaf";
            break;
        case DerivationNode::Step::Delete:
            j["step"] = "delete";
            j["hyperplane"] = n->hyperplane;
            break;
        case DerivationNode::Step::Add:
            j["step"] = "add";
            j["added"] = to_json(n->added);
            break;
        }
        if (n->first)
            j["first"] = self(self, n->first.get());
        if (n->restriction)
            j["restriction"] = self(self, n->restriction.get());
        nodes.push_back(std::move(j));
        return ids[n] = nodes.size() - 1;
    };
    return visit(visit, root.get());
}

DerivationRef nodes_from_json(const Json& nodes, std::size_t root) {
    std::vector<DerivationRef> built;
    built.reserve(nodes.size());
    auto child = [&](const Json& j, const char* key) -> DerivationRef {
        if (!j.contains(key))
            return nullptr;
        std::size_t i = index_field(j, key);
        if (i >= built.size())
            throw InputError(fmt::format("derivation node {} refers forward to {}", built.size(), i));
        return built[i];
    };
    for (const Json& j : nodes) {
        auto n = std::make_shared<DerivationNode>();
        std::string step = j.at("step").get<std::string>();
        if (step == "leaf") {
            n->step = DerivationNode::Step::Leaf;
        } else if (step == "delete") {
            n->step = DerivationNode::Step::Delete;
            n->hyperplane = index_field(j, "hyperplane");
        } else if (step == "add") {
            n->step = DerivationNode::Step::Add;
            n->added = hyperplane_from_json(j.at("added"));
        } else {
            throw InputError(fmt::format("unknown derivation step '{}'", step));
        }
        n->exponents = j.at("exponents").get<Exponents>();
        n->first = child(j, "first");
        n->restriction = child(j, "restriction");
        if (n->step != DerivationNode::Step::Leaf && !n->first)
            throw InputError(fmt::format("derivation node {} has no first child", built.size()));
        built.push_back(std::move(n));
    }
    if (root >= built.size())
        throw InputError("derivation root out of range");
    return built[root];
}

Json derivation_json(const DerivationRef& root) {
    Json nodes = Json::array();
    std::size_t r = node_table(root, nodes);
    return Json{{"nodes", std::move(nodes)}, {"root", r}};
}

DerivationRef derivation_from_json(const Json& j) {
    return nodes_from_json(j.at("nodes"), index_field(j, "root"));
}

} // namespace

Json document(std::string_view type, Json body) {
    body["schema"] = kSchema;
    body["type"] = type;
    return body;
}

void check_document(const Json& j, std::string_view type) {
    if (!j.is_object())
        throw InputError(fmt::format("expected a JSON object for {}", type));
    if (auto it = j.find("schema"); it != j.end() && *it != kSchema)
        throw InputError(fmt::format("unsupported schema {} (expected {})", it->dump(), kSchema));
    if (auto it = j.find("type"); it != j.end() && *it != type)
        throw InputError(fmt::format("expected a {} document, got {}", type, it->dump()));
}

Json to_json(const Hyperplane& h) { return Json{{"normal", h.normal}, {"offset", h.offset}}; }

Hyperplane hyperplane_from_json(const Json& j) {
    return guarded("hyperplane", [&] {
        return normalize(j.at("normal").get<IntVec>(), j.value("offset", Int{0}));
    });
}

Json to_json(const Arrangement& a) {
    Json hs = Json::array();
    for (const auto& h : a)
        hs.push_back(to_json(h));
    return document("arrangement", Json{{"dim", a.dim()}, {"hyperplanes", std::move(hs)}});
}

Arrangement arrangement_from_json(const Json& j) {
    check_document(j, "arrangement");
    return guarded("arrangement", [&] {
        std::size_t dim = index_field(j, "dim");
        std::vector<Hyperplane> hs;
        std::size_t i = 0;
        for (const Json& h : j.at("hyperplanes")) {
            Hyperplane x = hyperplane_from_json(h);
            if (x.dim() != dim)
                throw InputError(fmt::format("hyperplane {} has {} coordinates, expected {}", i, x.dim(), dim));
            if (std::all_of(x.normal.begin(), x.normal.end(), [](Int c) { return c == 0; }))
                throw InputError(fmt::format("hyperplane {} has a zero normal", i));
            hs.push_back(std::move(x));
            ++i;
        }
        return Arrangement::strict(dim, std::move(hs));
    });
}

Json to_json(const Polynomial& p) {
    Json j{{"coeffs", p.coeffs()}};
    if (auto roots = integer_roots(p))
        j["roots"] = *roots;
    else
        j["roots"] = nullptr;
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    return guarded("polynomial", [&] { return Polynomial(j.at("coeffs").get<IntVec>()); });
}

Json to_json(const Subspace& s) {
    Json eqs = Json::array();
    for (const auto& h : s.equations())
        eqs.push_back(to_json(h));
    return Json{{"dim", s.dim()}, {"equations", std::move(eqs)}};
}

Subspace subspace_from_json(const Json& j, std::size_t ambient) {
    return guarded("subspace", [&] {
        std::vector<Hyperplane> eqs;
        for (const Json& h : j.at("equations")) {
            eqs.push_back(hyperplane_from_json(h));
            if (eqs.back().dim() != ambient)
                throw InputError(fmt::format("equation with {} coordinates in ambient dimension {}",
                                             eqs.back().dim(), ambient));
        }
        auto s = Subspace::solve(ambient, eqs);
        if (!s)
            throw InputError("inconsistent equations for a flat");
        if (j.contains("dim") && j.at("dim").get<std::size_t>() != s->dim())
            throw InputError(fmt::format("flat declares dimension {} but its equations give {}",
                                         j.at("dim").get<std::size_t>(), s->dim()));
        return *s;
    });
}

Json to_json(const FreenessCertificate& c) {
    Json j{{"kind", kind_name(c.kind())}, {"arrangement", to_json(c.arrangement)},
           {"exponents", exponents_json(c.exponents)}};
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ModularChain>) {
                j["chain"] = Json{{"localizations", d.localizations}, {"exponents", d.exponents}};
            } else if constexpr (std::is_same_v<T, InductiveDerivation> || std::is_same_v<T, RecursiveDerivation>) {
                j["derivation"] = derivation_json(d.root);
            } else if constexpr (std::is_same_v<T, DivisionalFlag>) {
                Json flats = Json::array(), quotients = Json::array();
                for (const auto& f : d.flats)
                    flats.push_back(to_json(f));
                for (const auto& q : d.quotients)
                    quotients.push_back(q.coeffs());
                j["flag"] = Json{{"flats", std::move(flats)}, {"quotients", std::move(quotients)}};
            } else {
                j["partition"] = d.blocks;
            }
        },
        c.derivation);
    return document("freeness-certificate", std::move(j));
}

FreenessCertificate certificate_from_json(const Json& j) {
    check_document(j, "freeness-certificate");
    return guarded("certificate", [&] {
        FreenessCertificate c;
        c.arrangement = arrangement_from_json(j.at("arrangement"));
        c.exponents = j.at("exponents").get<Exponents>();
        std::string name = j.at("kind").get<std::string>();
        auto kind = kind_from_name(name);
        if (!kind)
            throw InputError(fmt::format("unknown certificate kind '{}'", name));
        switch (*kind) {
        case CertificateKind::Supersolvable: {
            const Json& ch = j.at("chain");
            c.derivation = ModularChain{ch.at("localizations").get<std::vector<std::vector<std::size_t>>>(),
                                        ch.at("exponents").get<IntVec>()};
            break;
        }
        case CertificateKind::Inductive:
            c.derivation = InductiveDerivation{derivation_from_json(j.at("derivation"))};
            break;
        case CertificateKind::Recursive:
            c.derivation = RecursiveDerivation{derivation_from_json(j.at("derivation"))};
            break;
        case CertificateKind::Divisional: {
            DivisionalFlag f;
            for (const Json& x : j.at("flag").at("flats"))
                f.flats.push_back(subspace_from_json(x, c.arrangement.dim()));
            for (const Json& q : j.at("flag").at("quotients"))
                f.quotients.emplace_back(q.get<IntVec>());
            c.derivation = std::move(f);
            break;
        }
        case CertificateKind::MAT:
            c.derivation = MatPartition{j.at("partition").get<std::vector<std::vector<std::size_t>>>()};
            break;
        }
        return c;
    });
}

Json to_json(const AccuracyWitness& w) {
    Json flats = Json::array(), exps = Json::array(), certs = Json::array(), cuts = Json::array();
    for (const auto& lv : w.levels) {
        flats.push_back(to_json(lv.flat));
        exps.push_back(lv.exponents);
        certs.push_back(lv.certificate ? Json(kind_name(*lv.certificate)) : Json(nullptr));
    }
    for (const auto& h : w.cuts)
        cuts.push_back(to_json(h));
    return document("accuracy-witness", Json{{"kind", witness_kind_name(w.kind)},
                                             {"k", w.k},
                                             {"flats", std::move(flats)},
                                             {"exponents_per_level", std::move(exps)},
                                             {"certificates", std::move(certs)},
                                             {"cuts", std::move(cuts)}});
}

AccuracyWitness witness_from_json(const Json& j, std::size_t ambient) {
    check_document(j, "accuracy-witness");
    return guarded("witness", [&] {
        AccuracyWitness w;
        std::string name = j.at("kind").get<std::string>();
        auto kind = witness_kind_from_name(name);
        if (!kind)
            throw InputError(fmt::format("unknown witness kind '{}'", name));
        w.kind = *kind;
        w.k = j.value("k", std::size_t{0});
        const Json& flats = j.at("flats");
        const Json& exps = j.at("exponents_per_level");
        if (flats.size() != exps.size())
            throw InputError("flats and exponents_per_level differ in length");
        const Json certs = j.value("certificates", Json::array());
        for (std::size_t i = 0; i < flats.size(); ++i) {
            WitnessLevel lv{subspace_from_json(flats[i], ambient), exps[i].get<Exponents>(), std::nullopt};
            if (i < certs.size() && !certs[i].is_null()) {
                lv.certificate = kind_from_name(certs[i].get<std::string>());
                if (!lv.certificate)
                    throw InputError(fmt::format("unknown certificate kind {}", certs[i].dump()));
            }
            w.levels.push_back(std::move(lv));
        }
        for (const Json& h : j.value("cuts", Json::array()))
            w.cuts.push_back(hyperplane_from_json(h));
        return w;
    });
}

Json to_json(const AccuracyReport& r) {
    Json witnesses = Json::array(), frontier = Json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back(to_json(w));
    for (const auto& f : r.frontier) {
        Json entries = Json::array();
        for (const auto& e : f.entries)
            entries.push_back(Json{{"generators", e.generators}, {"outcome", e.outcome}});
        frontier.push_back(Json{{"dim", f.dim}, {"flats", f.flats}, {"entries", std::move(entries)}, {"note", f.note}});
    }
    auto opt = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };
    return document("accuracy-report", Json{{"exponents", r.exponents},
                                            {"exponent_source", r.exponent_source},
                                            {"almost", decision_name(r.almost)},
                                            {"accurate", decision_name(r.accurate)},
                                            {"flag", decision_name(r.flag)},
                                            {"ind_flag", decision_name(r.ind_flag)},
                                            {"k", opt(r.k)},
                                            {"coaccuracy", opt(r.coaccuracy)},
                                            {"witnesses", std::move(witnesses)},
                                            {"frontier", std::move(frontier)},
                                            {"notes", r.notes}});
}

Json to_json(const SimpleGraph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back(Json::array({u, v}));
    return document("graph", Json{{"n", g.size()}, {"edges", std::move(edges)}});
}

SimpleGraph graph_from_json(const Json& j) {
    check_document(j, "graph");
    return guarded("graph", [&] {
        std::size_t n = index_field(j, "n");
        SimpleGraph g(n);
        for (const Json& e : j.at("edges")) {
            auto [u, v] = e.get<std::pair<std::size_t, std::size_t>>();
            if (u >= n || v >= n || u == v)
                throw InputError(fmt::format("bad edge [{}, {}] on {} vertices", u, v, n));
            if (g.adjacent(u, v))
                throw InputError(fmt::format("repeated edge [{}, {}]", u, v));
            g.add_edge(u, v);
        }
        return g;
    });
}

Json to_json(const WeightedDigraph& d) {
    Json arcs = Json::array(), weights = Json::object();
    for (auto [u, v] : d.arcs)
        arcs.push_back(Json::array({u, v}));
    for (std::size_t v = 0; v < d.weights.size(); ++v) {
        const auto& w = d.weights[v];
        if (w.values.empty())
            continue;
        weights[std::to_string(v)] =
            w.is_interval() ? Json::array({w.values.front(), w.values.back()}) : Json::array({Json(w.values)});
    }
    return document("digraph", Json{{"n", d.n}, {"edges", Json::array()}, {"arcs", std::move(arcs)},
                                    {"weights", std::move(weights)}});
}

WeightedDigraph digraph_from_json(const Json& j) {
    check_document(j, "digraph");
    return guarded("digraph", [&] {
        WeightedDigraph d;
        d.n = index_field(j, "n");
        d.weights.assign(d.n, VertexWeight{});
        if (j.contains("edges") && !j.at("edges").empty())
            throw InputError("digraph edges are implied (x_i = x_j for all pairs); list arcs only");
        for (const Json& e : j.value("arcs", Json::array())) {
            auto arc = e.get<std::pair<std::size_t, std::size_t>>();
            if (arc.first >= d.n || arc.second >= d.n || arc.first == arc.second)
                throw InputError(fmt::format("bad arc [{}, {}] on {} vertices", arc.first, arc.second, d.n));
            d.arcs.insert(arc);
        }
        const Json weights = j.value("weights", Json::object());
        for (const auto& [key, value] : weights.items()) {
            std::size_t v = 0;
            try {
                v = std::stoul(key);
            } catch (const std::exception&) {
                throw InputError(fmt::format("weight key '{}' is not a vertex", key));
            }
            if (v >= d.n)
                throw InputError(fmt::format("weight for vertex {} on {} vertices", v, d.n));
            if (value.size() == 1 && value[0].is_array()) {
                d.weights[v] = VertexWeight::set(value[0].get<std::vector<Int>>());
            } else if (value.size() == 2 && value[0].is_number_integer()) {
                Int lo = value[0].get<Int>(), hi = value[1].get<Int>();
                if (lo > hi)
                    throw InputError(fmt::format("empty weight interval [{}, {}] at vertex {}", lo, hi, v));
                d.weights[v] = VertexWeight::interval(lo, hi);
            } else {
                throw InputError(fmt::format("weight of vertex {} must be [lo, hi] or [[values]]", v));
            }
        }
        validate(d);
        return d;
    });
}

Json to_json(const DeformationSpec& s) {
    return document("deformation", Json{{"family", family_name(s.family)},
                                        {"base", s.base},
                                        {"m", s.m},
                                        {"a", s.a},
                                        {"n", s.n},
                                        {"p", s.p},
                                        {"l", s.l},
                                        {"r", s.r},
                                        {"ideal", s.ideal},
                                        {"simples", s.simples}});
}

DeformationSpec deformation_from_json(const Json& j) {
    check_document(j, "deformation");
    return guarded("deformation", [&] {
        DeformationSpec s;
        std::string name = j.at("family").get<std::string>();
        auto f = family_from_name(name);
        if (!f)
            throw InputError(fmt::format("unknown family '{}'", name));
        s.family = *f;
        s.base = j.value("base", std::string{});
        s.m = j.value("m", s.m);
        s.a = j.value("a", s.a);
        s.n = j.value("n", s.n);
        s.p = j.value("p", s.p);
        s.l = j.value("l", s.l);
        s.r = j.value("r", s.r);
        s.ideal = j.value("ideal", OrderIdeal{});
        s.simples = j.value("simples", std::vector<std::size_t>{});
        validate_parameters(s);
        return s;
    });
}

Json to_json(const DescendantSpec& s) {
    Json j{{"genealogy", genealogy_name(s.genealogy)}, {"l", s.l}, {"p", s.p}, {"k", s.k}, {"m", s.m}};
    if (s.genealogy == Genealogy::Shi) {
        j["d"] = s.d;
    } else {
        j["c"] = s.c;
        j["hat"] = s.hat;
    }
    return document("descendant", std::move(j));
}

DescendantSpec descendant_from_json(const Json& j) {
    check_document(j, "descendant");
    return guarded("descendant", [&] {
        DescendantSpec s;
        std::string name = j.at("genealogy").get<std::string>();
        auto g = genealogy_from_name(name);
        if (!g)
            throw InputError(fmt::format("unknown genealogy '{}'", name));
        s.genealogy = *g;
        s.l = j.value("l", s.l);
        s.p = j.value("p", s.p);
        s.k = j.value("k", s.k);
        s.m = j.value("m", s.m);
        s.d = j.value("d", s.d);
        s.c = j.value("c", s.c);
        s.hat = j.value("hat", s.hat);
        validate(s);
        return s;
    });
}

Json to_json(const CellReport& c) {
    Json spec = to_json(c.spec);
    spec.erase("schema");
    spec.erase("type");
    return Json{{"cell", to_string(c.spec)},
                {"spec", std::move(spec)},
                {"hyperplanes", c.hyperplanes},
                {"chi", to_json(c.chi)},
                {"expected", c.expected},
                {"chi_matches", c.chi_matches},
                {"replay_matches", c.replay_matches},
                {"witness_ok", c.witness_ok},
                {"note", c.note},
                {"ok", c.ok()}};
}

Json to_json(const RowReport& r) {
    Json cells = Json::array();
    for (const auto& c : r.cells)
        cells.push_back(to_json(c));
    return Json{{"cells", std::move(cells)}, {"chi_invariant", r.chi_invariant}, {"ok", r.ok()}};
}

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError(fmt::format("cannot open {}", path.string()));
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json(const std::filesystem::path& path, const Json& j) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw InputError(fmt::format("cannot write {}", path.string()));
    out << dump(j);
}

} // namespace arrlab
