#include "arrlab/experiments.hpp"

#include "arrlab/errors.hpp"
#include "arrlab/poset.hpp"
#include "arrlab/properties.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace arrlab {

namespace {

// ---------------------------------------------------------------- parameter access

const Json& need(const Json& params, const char* key) {
    if (!params.contains(key))
        throw InputError(fmt::format("missing parameter '{}'", key));
    return params.at(key);
}

template <class T>
T param(const Json& params, const char* key, T fallback) {
    if (!params.contains(key))
        return fallback;
    try {
        return params.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InputError(fmt::format("parameter '{}' has the wrong type: {}", key, params.at(key).dump()));
    }
}

Json strip(Json doc) {
    doc.erase("schema");
    doc.erase("type");
    return doc;
}

Json exponents_or_null(const Polynomial& chi) {
    auto roots = integer_roots(chi);
    return roots ? Json(*roots) : Json(nullptr);
}

Json opt(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Arrangement arrangement_param(const Json& params) {
    const Json& src = need(params, "arrangement");
    Arrangement a = src.is_string() ? arrangement_from_json(read_json(src.get<std::string>())) : arrangement_from_json(src);
    return param(params, "cone", false) ? cone(a) : a;
}

Json verdict_json(const FreenessVerdict& v) {
    if (const auto* c = certificate_of(v)) {
        Replay r = replay(*c);
        return Json{{"verdict", "free"}, {"kind", kind_name(c->kind())}, {"exponents", c->exponents},
                    {"replay", r.ok}, {"certificate", to_json(*c)}};
    }
    if (const auto* n = std::get_if<NotFree>(&v))
        return Json{{"verdict", "not-free"}, {"reason", n->reason}};
    const auto& u = std::get<Unknown>(v);
    return Json{{"verdict", "unknown"}, {"reason", u.reason}, {"exhausted", u.exhausted}};
}

Method method_from_name(const std::string& name) {
    static const std::map<std::string, Method, std::less<>> methods{{"auto", Method::Auto},
                                                                    {"supersolvable", Method::Supersolvable},
                                                                    {"inductive", Method::Inductive},
                                                                    {"divisional", Method::Divisional},
                                                                    {"mat", Method::MAT}};
    auto it = methods.find(name);
    if (it == methods.end())
        throw InputError(fmt::format("unknown method '{}'", name));
    return it->second;
}

Json decisions(const AccuracyReport& r) {
    return Json{{"exponents", r.exponents},   {"almost", decision_name(r.almost)},
                {"accurate", decision_name(r.accurate)}, {"flag", decision_name(r.flag)},
                {"ind_flag", decision_name(r.ind_flag)}, {"k", opt(r.k)},
                {"coaccuracy", opt(r.coaccuracy)}};
}

// ---------------------------------------------------------------- arrangements

Json run_chi(const Json& params, const Budget& budget) {
    Arrangement a = arrangement_param(params);
    Polynomial chi = char_poly(a, budget.search().poset);
    return Json{{"dim", a.dim()}, {"hyperplanes", a.size()}, {"chi", to_json(chi)}, {"ok", true}};
}

Json run_free(const Json& params, const Budget& budget) {
    Arrangement a = arrangement_param(params);
    Json out = verdict_json(certify_free(a, method_from_name(param<std::string>(params, "method", "auto")), budget.search()));
    out["ok"] = out["verdict"] != "free" || out["replay"] == true;
    return out;
}

Json run_accuracy(const Json& params, const Budget& budget) {
    Arrangement a = arrangement_param(params);
    AccuracyOptions options;
    options.search = budget.search();
    AccuracyReport r = accuracy_profile(a, options);
    bool witnesses_ok = true;
    for (const auto& w : r.witnesses)
        witnesses_ok = witnesses_ok && check_witness(a, w, nullptr, options.search);
    Json out = decisions(r);
    out["witnesses_ok"] = witnesses_ok;
    out["report"] = strip(to_json(r));
    out["ok"] = witnesses_ok;
    return out;
}

// ---------------------------------------------------------------- deformations

std::vector<Hyperplane> bc_cuts(const DeformationSpec& s) {
    // x_p = -m z restricts B^p_l(m, a) to B^0_{l-1}(m + a, a) on the remaining coordinates.
    const Int coefficient = s.family == Family::Cfam ? 2 : 1;
    const std::size_t dim = s.l + 1;
    std::vector<std::size_t> order{std::min(s.p, s.l - 1)};
    for (std::size_t i = 0; i < s.l; ++i)
        if (i != order.front())
            order.push_back(i);
    std::vector<Hyperplane> cuts;
    Int m = s.m;
    for (std::size_t t = 0; t + 1 < s.l; ++t) {
        IntVec v(dim, 0);
        v[order[t]] = coefficient;
        v[dim - 1] = m;
        cuts.push_back(normalize(std::move(v), 0));
        m += s.a * coefficient;
    }
    return cuts;
}

std::string default_witness_method(const DeformationSpec& s) {
    switch (s.family) {
    case Family::ExtShi:
        return "simple-root";
    case Family::ExtCat:
        return s.base.front() == 'A' ? "cat" : "search";
    case Family::Bfam:
    case Family::Cfam:
        return "bc";
    case Family::Hfam:
        return "hfam";
    case Family::Efam:
        return "efam";
    default:
        return "search";
    }
}

std::optional<AccuracyWitness> deformation_witness(const DeformationSpec& s, const Arrangement& c,
                                                   const std::string& method, const SearchOptions& options) {
    if (method == "simple-root")
        return simple_root_witness(c, build_root_system(s.base), options);
    if (method == "cat")
        return cat_witness(build_root_system(s.base), s.m, options);
    if (method == "bc")
        return witness_from_cuts(c, bc_cuts(s), WitnessKind::Flag, options);
    if (method == "hfam")
        return hfam_witness(s.p, s.l, s.m, s.a, s.n, options);
    if (method == "efam")
        return efam_witness(s.p, s.l, s.n, s.a, s.m, options);
    if (method == "search")
        return flag_accuracy(c, options);
    throw InputError(fmt::format("unknown witness method '{}'", method));
}

Json run_deform(const Json& params, const Budget& budget) {
    DeformationSpec s = deformation_from_json(need(params, "spec"));
    Deformation d = build(s);
    Arrangement c = cone(d.arrangement);
    const SearchOptions options = budget.search();
    Polynomial chi = char_poly(c, options.poset);
    ExpectedExponents expected = expected_exponents(s);
    Json out{{"spec", to_string(s)},
             {"hyperplanes", d.arrangement.size()},
             {"listed", d.listed},
             {"chi", to_json(chi)},
             {"exponents", exponents_or_null(chi)},
             {"expected", expected.exponents},
             {"provenance", provenance_name(expected.provenance)},
             {"exponents_match", chi == Polynomial::from_roots(expected.exponents)}};
    bool ok = out["exponents_match"].get<bool>();
    std::string method = param<std::string>(params, "witness", "auto");
    if (method == "auto")
        method = default_witness_method(s);
    if (method != "none") {
        auto w = deformation_witness(s, c, method, options);
        std::string why;
        bool checked = w && check_witness(c, *w, &why, options);
        out["witness"] = Json{{"method", method}, {"found", w.has_value()}, {"ok", checked}};
        if (w)
            out["witness"]["document"] = strip(to_json(*w));
        if (!why.empty())
            out["witness"]["why"] = why;
        ok = ok && checked;
    }
    if (param(params, "free", false)) {
        out["free"] = verdict_json(certify_free(c, Method::Auto, options));
        ok = ok && out["free"]["verdict"] == "free" && out["free"]["replay"] == true;
    }
    out["ok"] = ok;
    return out;
}

// ---------------------------------------------------------------- graphs

SimpleGraph graph_param(const Json& spec) {
    if (spec.is_string())
        return graph_from_json(read_json(spec.get<std::string>()));
    if (!spec.contains("builder"))
        return graph_from_json(spec);
    const auto builder = spec.at("builder").get<std::string>();
    if (builder == "sun")
        return build_sun(param<std::size_t>(spec, "n", 3));
    if (builder == "q4-ext")
        return build_q4_ext(param<std::size_t>(spec, "k", 1));
    if (builder == "q")
        return build_q_family(QSpec{param<std::size_t>(spec, "l", 2), param(spec, "weights", std::vector<Int>{})});
    if (builder == "complete")
        return complete_graph(param<std::size_t>(spec, "n", 3));
    if (builder == "cycle")
        return cycle_graph(param<std::size_t>(spec, "n", 4));
    if (builder == "example-not-accurate")
        return example_not_accurate();
    if (builder == "example-not-accurate-extended")
        return example_not_accurate_extended();
    if (builder == "example-strong-not-g")
        return example_strong_not_g();
    throw InputError(fmt::format("unknown graph builder '{}'", builder));
}

Json run_graph(const Json& params, const Budget& budget) {
    SimpleGraph g = graph_param(need(params, "graph"));
    auto checks = param(params, "checks", std::vector<std::string>{"chordal", "strong", "class-g", "accuracy"});
    Json out{{"n", g.size()}, {"edges", g.edge_count()}};
    bool ok = true;
    const bool chordal = is_chordal(g).has_value();
    for (const auto& check : checks) {
        if (check == "chordal") {
            out["chordal"] = chordal;
            if (chordal)
                out["exponents"] = graphic_exponents(g);
        } else if (check == "strong") {
            out["strong"] = is_strongly_chordal(g);
        } else if (check == "class-g") {
            out["class_g"] = in_class_g(g);
        } else if (check == "free") {
            auto v = certify_free(graphic_arrangement(g), Method::Auto, budget.search());
            out["free"] = certified(v);
        } else if (check == "mat") {
            auto m = mat_free_search(graphic_arrangement(g), budget.search());
            out["mat"] = m.outcome == MatSearch::Outcome::Found ? "found" : m.outcome == MatSearch::Outcome::None ? "none" : "unknown";
        } else if (check == "accuracy") {
            if (!chordal) {
                out["accuracy"] = Json{{"flag", "no"}, {"note", "not chordal, hence not free"}};
                continue;
            }
            AccuracyOptions options;
            options.search = budget.search();
            AccuracyReport r = graphic_accuracy(g, options);
            Json acc = decisions(r);
            bool witnesses_ok = true;
            for (const auto& w : r.witnesses)
                witnesses_ok = witnesses_ok && check_graphic_witness(g, w);
            acc["witnesses_ok"] = witnesses_ok;
            if (const auto* w = r.witness(WitnessKind::Flag))
                acc["flag_witness"] = strip(to_json(*w));
            out["accuracy"] = std::move(acc);
            ok = ok && witnesses_ok;
        } else {
            throw InputError(fmt::format("unknown graph check '{}'", check));
        }
    }
    out["ok"] = ok;
    return out;
}

Json run_graph_sweep(const Json& params, const Budget& budget) {
    const auto max_n = param<std::size_t>(params, "max_n", 6);
    if (max_n > 7)
        throw InputError("graph sweeps are limited to 7 vertices");
    std::size_t graphs = 0, chordal = 0, strong = 0;
    Json free_mismatches = Json::array(), mat_mismatches = Json::array();
    for (std::size_t n = 1; n <= max_n; ++n)
        for (const auto& g : graphs_up_to_isomorphism(n)) {
            ++graphs;
            Arrangement a = graphic_arrangement(g);
            const bool c = is_chordal(g).has_value(), s = is_strongly_chordal(g);
            chordal += c;
            strong += s;
            if (certified(certify_free(a, Method::Auto, budget.search())) != c)
                free_mismatches.push_back(to_string(g));
            if ((mat_free_search(a, budget.search()).outcome == MatSearch::Outcome::Found) != s)
                mat_mismatches.push_back(to_string(g));
        }
    return Json{{"max_n", max_n},
                {"graphs", graphs},
                {"chordal", chordal},
                {"strongly_chordal", strong},
                {"free_mismatches", free_mismatches},
                {"mat_mismatches", mat_mismatches},
                {"ok", free_mismatches.empty() && mat_mismatches.empty()}};
}

// ---------------------------------------------------------------- root systems

Json run_ideals(const Json& params, const Budget& budget) {
    RootSystem phi = build_root_system(need(params, "type").get<std::string>());
    const bool flag = param(params, "flag", true);
    AccuracyOptions options;
    options.search = budget.search();
    options.almost = false;
    options.levels = false;
    options.ind_flag = false;
    std::size_t ideals = 0, mat_ok = 0, flag_ok = 0;
    Json failures = Json::array();
    enumerate_ideals(phi, [&](const OrderIdeal& ideal) {
        ++ideals;
        IdealArrangement ia = ideal_arrangement(phi, ideal);
        auto exps = verify_mat_partition(ia.arrangement, ia.partition);
        const std::string label = fmt::format("[{}]", fmt::join(ideal, ","));
        if (!exps || char_poly(ia.arrangement, options.search.poset) != Polynomial::from_roots(*exps)) {
            failures.push_back(label + ": MAT partition");
            return true;
        }
        ++mat_ok;
        if (!flag)
            return true;
        AccuracyReport r = accuracy_profile(ia.arrangement, options, *exps);
        const AccuracyWitness* w = r.witness(WitnessKind::Flag);
        if (r.flag == Decision::Yes && w && check_witness(ia.arrangement, *w, nullptr, options.search))
            ++flag_ok;
        else
            failures.push_back(fmt::format("{}: flag-accuracy {}", label, decision_name(r.flag)));
        return true;
    });
    return Json{{"type", phi.label}, {"ideals", ideals}, {"mat_verified", mat_ok},
                {"flag_accurate", flag ? Json(flag_ok) : Json(nullptr)}, {"failures", failures},
                {"ok", failures.empty()}};
}

// ---------------------------------------------------------------- descendants

Json run_descend(const Json& params, const Budget& budget) {
    Json spec = params;
    spec.erase("rows");
    spec["p"] = 0;
    spec["k"] = 1;
    DescendantSpec origin = descendant_from_json(spec);
    std::vector<std::size_t> rows;
    if (params.contains("rows")) {
        rows = param(params, "rows", rows);
    } else {
        rows.resize(origin.l + 1);
        std::iota(rows.begin(), rows.end(), 0);
    }
    Json out_rows = Json::array(), failures = Json::array();
    for (std::size_t p : rows) {
        DescendantSpec s = origin;
        s.p = p;
        validate(s);
        RowReport r = validate_row(s, budget.search());
        for (const auto& c : r.cells)
            if (!c.ok())
                failures.push_back(fmt::format("{}: {}", to_string(c.spec), c.note));
        if (!r.chi_invariant)
            failures.push_back(fmt::format("row p = {}: chi changes along the row", p));
        Json row = to_json(r);
        row["p"] = p;
        out_rows.push_back(std::move(row));
    }
    return Json{{"rows", std::move(out_rows)}, {"failures", failures}, {"ok", failures.empty()}};
}

// Strictly nested: prefixes of one random ordering of the range, with distinct lengths.
std::vector<std::vector<Int>> random_nested(std::mt19937_64& rng, std::size_t l, Int lo, Int hi) {
    std::vector<Int> range(static_cast<std::size_t>(hi - lo + 1));
    std::iota(range.begin(), range.end(), lo);
    std::shuffle(range.begin(), range.end(), rng);
    std::vector<std::size_t> sizes(range.size());
    std::iota(sizes.begin(), sizes.end(), 1);
    std::shuffle(sizes.begin(), sizes.end(), rng);
    sizes.resize(l);
    std::vector<std::vector<Int>> sets;
    for (std::size_t s : sizes)
        sets.emplace_back(range.begin(), range.begin() + static_cast<std::ptrdiff_t>(s));
    return sets;
}

std::vector<std::vector<Int>> random_unnested(std::mt19937_64& rng, std::size_t l, Int lo, Int hi) {
    std::bernoulli_distribution coin(0.5);
    while (true) {
        std::vector<std::vector<Int>> sets(l);
        for (auto& s : sets)
            while (s.empty())
                for (Int x = lo; x <= hi; ++x)
                    if (coin(rng))
                        s.push_back(x);
        if (!nishi_nested(sets))
            return sets;
    }
}

Json run_nish(const Json& params, const Budget& budget) {
    const auto count = param<std::size_t>(params, "count", 50);
    const auto max_l = param<std::size_t>(params, "max_l", 4);
    const Int lo = param<Int>(params, "lo", -3), hi = param<Int>(params, "hi", 3);
    const bool nested = param(params, "nested", true);
    if (max_l < 2 || lo > hi || (nested && static_cast<Int>(max_l) > hi - lo + 1))
        throw InputError("N-Ish sampling needs 2 <= max_l <= hi - lo + 1");
    std::mt19937_64 rng(param<std::uint64_t>(params, "seed", 1));
    std::uniform_int_distribution<std::size_t> ls(2, max_l);
    const SearchOptions options = budget.search();
    Json failures = Json::array(), samples = Json::array();
    std::size_t split = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t l = ls(rng);
        auto sets = nested ? random_nested(rng, l, lo, hi) : random_unnested(rng, l, lo, hi);
        samples.push_back(sets);
        Arrangement c = cone(digraphic_arrangement(nish(sets)));
        const std::string label = Json(sets).dump();
        auto chain = supersolvable(c, options.poset);
        if (nested) {
            Exponents expected = nish_cone_exponents(sets, *nishi_nested(sets));
            if (!chain || chain->exponents != expected)
                failures.push_back(label + ": not supersolvable with the nested exponents");
            else if (!nish_witness(sets, options))
                failures.push_back(label + ": no ind-flag witness");
        } else {
            const bool splits = integer_roots(char_poly(c, options.poset)).has_value();
            split += splits;
            if (chain)
                failures.push_back(label + ": supersolvable");
            else if (certified(certify_free(c, Method::Auto, options)))
                failures.push_back(label + ": certified free");
        }
    }
    Json out{{"nested", nested}, {"count", count}, {"samples", samples}, {"failures", failures}, {"ok", failures.empty()}};
    if (!nested)
        out["chi_splits"] = split;
    return out;
}

Json run_property_job(const Json& params, const Budget&) {
    const auto name = need(params, "name").get<std::string>();
    const auto count = param<std::size_t>(params, "count", 100);
    const auto seed = param<std::uint64_t>(params, "seed", 1);
    PropertyReport r;
    if (name == "coning-identity") {
        RandomArrangementOptions o;
        o.max_dim = param(params, "max_dim", o.max_dim);
        o.max_hyperplanes = param(params, "max_hyperplanes", o.max_hyperplanes);
        o.max_coeff = param(params, "max_coeff", o.max_coeff);
        r = check_coning_identity(count, seed, o);
    } else {
        r = run_property(name, count, seed, param<std::size_t>(params, "max_l", 3));
    }
    return Json{{"name", r.name}, {"cases", r.cases}, {"sampled", r.sampled}, {"failures", r.failures}, {"ok", r.ok()}};
}

using Runner = Json (*)(const Json&, const Budget&);

struct KindEntry {
    JobKind kind;
    Runner run;
};

const std::vector<KindEntry>& registry() {
    static const std::vector<KindEntry> entries{
        {{"chi", "characteristic polynomial of an arrangement"}, run_chi},
        {{"free", "freeness certificate by method, replayed"}, run_free},
        {{"accuracy", "accuracy profile of a central free arrangement"}, run_accuracy},
        {{"deform", "deformation cone: chi against the exponent formula, plus a witness"}, run_deform},
        {{"graph", "graph checks: chordal, strong, class-g, free, mat, accuracy"}, run_graph},
        {{"graph-sweep", "all graphs up to isomorphism: free vs chordal, MAT vs strongly chordal"}, run_graph_sweep},
        {{"ideals", "every order ideal of a root system: MAT partition and flag-accuracy"}, run_ideals},
        {{"descend", "descendant matrix rows validated cell by cell"}, run_descend},
        {{"nish", "random N-Ish tuples, nested or not"}, run_nish},
        {{"property", "a named property check"}, run_property_job},
    };
    return entries;
}

Runner runner(std::string_view kind) {
    for (const auto& e : registry())
        if (e.kind.name == kind)
            return e.run;
    throw InputError(fmt::format("unknown job kind '{}'", kind));
}

Json budget_json(const Budget& b) { return Json{{"flats", b.flats}, {"depth", b.depth}}; }

Budget budget_from(const Json& j, Budget b) {
    b.flats = param(j, "flats", b.flats);
    b.depth = param(j, "depth", b.depth);
    return b;
}

void collect_diffs(const Json& expect, const Json& result, const std::string& path, std::vector<std::string>& out) {
    if (expect.is_object() && result.is_object()) {
        for (const auto& [key, value] : expect.items()) {
            const std::string sub = path.empty() ? key : path + "." + key;
            if (!result.contains(key))
                out.push_back(fmt::format("{}: expected {}, missing", sub, value.dump()));
            else
                collect_diffs(value, result.at(key), sub, out);
        }
        return;
    }
    if (expect != result)
        out.push_back(fmt::format("{}: expected {}, got {}", path.empty() ? "." : path, expect.dump(), result.dump()));
}

JobOutcome execute(const Job& job, const Budget& fallback) {
    JobOutcome o;
    o.name = job.name;
    o.criterion = job.criterion;
    const auto start = std::chrono::steady_clock::now();
    try {
        o.result = runner(job.kind)(job.params, job.budget.value_or(fallback));
        o.diffs = expectation_diffs(job.expect, o.result);
        o.status = o.diffs.empty() ? JobStatus::Pass : JobStatus::Mismatch;
    } catch (const InputError& e) {
        o.status = JobStatus::Input;
        o.message = e.what();
    } catch (const BudgetExceeded& e) {
        o.status = JobStatus::Budget;
        o.message = e.what();
    } catch (const std::exception& e) {
        o.status = JobStatus::Error;
        o.message = e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return o;
}

Json job_json(const Job& j) {
    Json out{{"name", j.name}, {"kind", j.kind}, {"params", j.params}, {"expect", j.expect}};
    if (j.criterion)
        out["criterion"] = *j.criterion;
    if (!j.title.empty())
        out["title"] = j.title;
    if (j.budget)
        out["budget"] = budget_json(*j.budget);
    return out;
}

} // namespace

SearchOptions Budget::search() const {
    SearchOptions s;
    s.max_nodes = depth;
    s.poset.max_flats = flats;
    return s;
}

Json to_json(const Manifest& m) {
    Json jobs = Json::array();
    for (const auto& j : m.jobs)
        jobs.push_back(job_json(j));
    return document("manifest", Json{{"name", m.name}, {"output", m.output.generic_string()},
                                     {"budget", budget_json(m.budget)}, {"jobs", std::move(jobs)}});
}

Manifest manifest_from_json(const Json& j) {
    check_document(j, "manifest");
    static const std::set<std::string, std::less<>> top{"schema", "type", "name", "output", "budget", "jobs"};
    static const std::set<std::string, std::less<>> fields{"name", "kind", "params", "expect", "criterion", "title", "budget"};
    for (const auto& [key, value] : j.items())
        if (!top.count(key))
            throw InputError(fmt::format("unknown manifest key '{}'", key));
    Manifest m;
    m.name = param<std::string>(j, "name", "");
    m.output = param<std::string>(j, "output", "");
    if (j.contains("budget"))
        m.budget = budget_from(j.at("budget"), m.budget);
    std::set<std::string> names;
    const Json jobs = param(j, "jobs", Json::array());
    if (!jobs.is_array())
        throw InputError("manifest jobs must be an array");
    for (const Json& x : jobs) {
        if (!x.is_object())
            throw InputError("each job must be an object");
        for (const auto& [key, value] : x.items())
            if (!fields.count(key))
                throw InputError(fmt::format("unknown job key '{}'", key));
        Job job;
        job.name = need(x, "name").get<std::string>();
        job.kind = need(x, "kind").get<std::string>();
        runner(job.kind);
        if (job.name.empty() || job.name.find_first_of("/\\") != std::string::npos)
            throw InputError(fmt::format("bad job name '{}'", job.name));
        if (!names.insert(job.name).second)
            throw InputError(fmt::format("repeated job name '{}'", job.name));
        job.params = param(x, "params", Json::object());
        job.expect = param(x, "expect", Json::object());
        if (x.contains("criterion"))
            job.criterion = param<int>(x, "criterion", 0);
        job.title = param<std::string>(x, "title", "");
        if (x.contains("budget"))
            job.budget = budget_from(x.at("budget"), m.budget);
        m.jobs.push_back(std::move(job));
    }
    return m;
}

const std::vector<JobKind>& job_kinds() {
    static const std::vector<JobKind> kinds = [] {
        std::vector<JobKind> out;
        for (const auto& e : registry())
            out.push_back(e.kind);
        return out;
    }();
    return kinds;
}

Json run_job(const Job& job, const Budget& budget) { return runner(job.kind)(job.params, budget); }

std::string_view status_name(JobStatus s) {
    switch (s) {
    case JobStatus::Pass:
        return "pass";
    case JobStatus::Mismatch:
        return "MISMATCH";
    case JobStatus::Budget:
        return "BUDGET";
    case JobStatus::Input:
        return "INPUT";
    case JobStatus::Error:
        return "ERROR";
    }
    return "?";
}

std::vector<std::string> expectation_diffs(const Json& expect, const Json& result) {
    std::vector<std::string> out;
    collect_diffs(expect, result, "", out);
    return out;
}

std::vector<JobOutcome> run_manifest(const Manifest& m, const RunOptions& options) {
    std::vector<const Job*> selected;
    for (const auto& j : m.jobs)
        if (options.only.empty() || std::find(options.only.begin(), options.only.end(), j.name) != options.only.end())
            selected.push_back(&j);
    for (const auto& name : options.only)
        if (std::none_of(m.jobs.begin(), m.jobs.end(), [&](const Job& j) { return j.name == name; }))
            throw InputError(fmt::format("no job named '{}'", name));

    std::vector<JobOutcome> outcomes(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < selected.size();)
            outcomes[i] = execute(*selected[i], m.budget);
    };
    const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(1, selected.size()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }

    const auto dir = options.output.value_or(m.output);
    if (options.write && !dir.empty()) {
        Json summary = Json::array();
        for (std::size_t i = 0; i < selected.size(); ++i) {
            const auto& o = outcomes[i];
            Json doc = job_json(*selected[i]);
            doc["status"] = status_name(o.status);
            doc["result"] = o.result;
            doc["diffs"] = o.diffs;
            if (!o.message.empty())
                doc["message"] = o.message;
            write_json(dir / (o.name + ".json"), document("job-result", std::move(doc)));
            summary.push_back(Json{{"name", o.name}, {"status", status_name(o.status)}, {"diffs", o.diffs.size()}});
        }
        write_json(dir / "summary.json", document("summary", Json{{"manifest", m.name}, {"jobs", std::move(summary)}}));
    }
    return outcomes;
}

std::string summary_table(const std::vector<JobOutcome>& outcomes) {
    std::size_t width = 4;
    for (const auto& o : outcomes)
        width = std::max(width, o.name.size());
    std::string out = fmt::format("{:<{}}  {:>4}  {:<8}  {:>8}  {}\n", "job", width, "crit", "status", "seconds", "detail");
    std::size_t passed = 0;
    for (const auto& o : outcomes) {
        passed += o.status == JobStatus::Pass;
        std::string detail = !o.message.empty() ? o.message : !o.diffs.empty() ? o.diffs.front() : "";
        if (o.diffs.size() > 1)
            detail += fmt::format(" (+{} more)", o.diffs.size() - 1);
        out += fmt::format("{:<{}}  {:>4}  {:<8}  {:>8.2f}  {}\n", o.name, width,
                           o.criterion ? std::to_string(*o.criterion) : "-", status_name(o.status), o.seconds, detail);
    }
    out += fmt::format("{} of {} jobs passed\n", passed, outcomes.size());
    return out;
}

int exit_code(const std::vector<JobOutcome>& outcomes) {
    auto any = [&](JobStatus s) {
        return std::any_of(outcomes.begin(), outcomes.end(), [&](const JobOutcome& o) { return o.status == s; });
    };
    if (any(JobStatus::Mismatch) || any(JobStatus::Error))
        return 1;
    if (any(JobStatus::Budget))
        return 2;
    if (any(JobStatus::Input))
        return 3;
    return 0;
}

} // namespace arrlab
