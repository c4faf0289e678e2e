// arrlab: command-line front end over the arrlab library.
#include "arrlab/errors.hpp"
#include "arrlab/experiments.hpp"
#include "arrlab/poset.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cstdio>
#include <iostream>

using namespace arrlab;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBudget = 2, kInput = 3 };

struct Globals {
    Budget budget;
};

void emit(const Json& j, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << dump(j);
    else
        write_json(out, j);
}

Arrangement load(const std::string& path) { return arrangement_from_json(read_json(path)); }

Subspace flat_of(const Arrangement& a, const std::vector<std::size_t>& hyperplanes) {
    for (auto i : hyperplanes)
        if (i >= a.size())
            throw InputError(fmt::format("hyperplane {} out of range (arrangement has {})", i, a.size()));
    auto f = meet(a, hyperplanes);
    if (!f)
        throw InputError("the listed hyperplanes do not meet");
    return f->space;
}

std::string default_certificate_path(const std::string& input) {
    std::filesystem::path p(input);
    return (p.parent_path() / (p.stem().string() + ".cert.json")).string();
}

int cmd_chi(const std::string& file, bool as_json, bool coned, const Globals& g) {
    Arrangement a = load(file);
    if (coned)
        a = cone(a);
    Polynomial chi = char_poly(a, g.budget.search().poset);
    if (as_json) {
        std::cout << dump(to_json(chi));
        return kOk;
    }
    fmt::print("chi(t) = {}\n", chi.str());
    if (auto roots = integer_roots(chi))
        fmt::print("       = {}\n", factored(*roots));
    else
        fmt::print("does not split over the integers\n");
    return kOk;
}

int cmd_free(const std::string& file, const std::string& method, std::string cert, const Globals& g) {
    Job job{"free", "free", {{"arrangement", file}, {"method", method}}};
    Json r = run_job(job, g.budget);
    const std::string verdict = r["verdict"];
    if (verdict == "free") {
        if (cert.empty())
            cert = default_certificate_path(file);
        emit(r["certificate"], cert);
        fmt::print("free ({}), exponents ({})\n", r["kind"].get<std::string>(),
                   fmt::join(r["exponents"].get<IntVec>(), ", "));
        fmt::print("certificate: {}\n", cert);
        return r["replay"] == true ? kOk : kMismatch;
    }
    fmt::print("{}: {}\n", verdict, r["reason"].get<std::string>());
    if (verdict == "unknown" && r["exhausted"] == false)
        return kBudget;
    return kOk;
}

int cmd_accuracy(const std::string& file, const std::string& kind, std::size_t budget, const std::string& out,
                 Globals g) {
    if (budget)
        g.budget.flats = budget;
    Arrangement a = load(file);
    AccuracyOptions options;
    options.search = g.budget.search();
    if (kind == "flag") {
        options.almost = false;
        options.levels = false;
        options.ind_flag = false;
    } else if (kind == "accurate") {
        options.almost = false;
        options.ind_flag = false;
    } else if (kind != "profile") {
        throw InputError(fmt::format("unknown kind '{}'", kind));
    }
    AccuracyReport r = accuracy_profile(a, options);
    if (kind == "profile") {
        emit(to_json(r), out);
        return kOk;
    }
    const WitnessKind want = kind == "flag" ? WitnessKind::Flag : WitnessKind::Accurate;
    const Decision d = kind == "flag" ? r.flag : r.accurate;
    if (const auto* w = r.witness(want)) {
        Json doc = to_json(*w);
        doc["arrangement"] = to_json(a);
        emit(doc, out);
        return kOk;
    }
    fmt::print(stderr, "{}: {}\n", kind, decision_name(d));
    for (const auto& n : r.notes)
        fmt::print(stderr, "  {}\n", n);
    return d == Decision::Undecided ? kBudget : kOk;
}

int cmd_graph(const std::string& file, const Json& builder, const std::vector<std::string>& checks, const Globals& g) {
    Json params{{"graph", file.empty() ? builder : Json(file)}};
    if (!checks.empty())
        params["checks"] = checks;
    Json r = run_job(Job{"graph", "graph", params}, g.budget);
    std::cout << dump(r);
    return r["ok"] == true ? kOk : kMismatch;
}

void print_root_dot(const RootSystem& phi) {
    fmt::print("digraph roots_{} {{\n  rankdir=BT;\n", phi.label);
    for (std::size_t i = 0; i < phi.size(); ++i)
        fmt::print("  r{} [label=\"{}\"{}];\n", i, fmt::join(phi.coefficients[i], ""), phi.is_simple(i) ? ", shape=box" : "");
    for (std::size_t i = 0; i < phi.size(); ++i)
        for (auto b : phi.below[i])
            fmt::print("  r{} -> r{};\n", b, i);
    fmt::print("}}\n");
}

int cmd_ideal(const std::string& type, bool all, const std::vector<std::size_t>& ideal, const std::string& check,
              bool roots, const Globals& g) {
    RootSystem phi = build_root_system(type);
    if (roots) {
        print_root_dot(phi);
        return kOk;
    }
    if (check != "flag-accuracy" && check != "mat" && check != "none")
        throw InputError(fmt::format("unknown check '{}'", check));
    AccuracyOptions options;
    options.search = g.budget.search();
    options.almost = options.levels = options.ind_flag = false;
    bool failed = false;
    auto visit = [&](const OrderIdeal& i) {
        IdealArrangement ia = ideal_arrangement(phi, i);
        Json line{{"type", phi.label}, {"ideal", i}, {"hyperplanes", ia.arrangement.size()}};
        if (check != "none") {
            auto exps = verify_mat_partition(ia.arrangement, ia.partition);
            line["mat"] = exps.has_value();
            failed = failed || !exps;
            if (exps)
                line["exponents"] = *exps;
            if (exps && check == "flag-accuracy") {
                AccuracyReport r = accuracy_profile(ia.arrangement, options, *exps);
                line["flag"] = decision_name(r.flag);
                failed = failed || r.flag != Decision::Yes;
            }
        }
        std::cout << line.dump() << "\n";
        return true;
    };
    if (all) {
        enumerate_ideals(phi, visit);
    } else {
        OrderIdeal sorted = ideal;
        std::sort(sorted.begin(), sorted.end());
        visit(sorted);
    }
    return failed ? kMismatch : kOk;
}

int cmd_deform(const DeformationSpec& s, bool coned, bool validate, const std::string& witness, const Globals& g) {
    if (!validate) {
        Arrangement a = build(s).arrangement;
        std::cout << dump(to_json(coned ? cone(a) : a));
        return kOk;
    }
    Json spec = to_json(s);
    Json r = run_job(Job{"deform", "deform", {{"spec", spec}, {"witness", witness}, {"free", true}}}, g.budget);
    std::cout << dump(r);
    return r["ok"] == true ? kOk : kMismatch;
}

int cmd_descend(DescendantSpec s, std::optional<std::size_t> row, bool validate, const Globals& g) {
    if (validate) {
        Json params{{"genealogy", genealogy_name(s.genealogy)}, {"l", s.l}, {"m", s.m}, {"d", s.d}, {"c", s.c}};
        if (row)
            params["rows"] = std::vector<std::size_t>{*row};
        Json r = run_job(Job{"descend", "descend", params}, g.budget);
        std::cout << dump(r);
        return r["ok"] == true ? kOk : kMismatch;
    }
    Json rows = Json::array();
    for (std::size_t p = 0; p <= s.l; ++p) {
        if (row && *row != p)
            continue;
        s.p = p;
        s.k = 1;
        Json cells = Json::array();
        for (const auto& cell : descendant_row(s))
            cells.push_back(Json{{"cell", to_string(cell)},
                                 {"digraph", to_json(descendant_digraph(cell))},
                                 {"expected", descendant_expected_exponents(cell)}});
        rows.push_back(Json{{"p", p}, {"cells", std::move(cells)}});
    }
    std::cout << dump(document("descendant-matrix", Json{{"rows", std::move(rows)}}));
    return kOk;
}

int cmd_verify(const std::string& file, const std::string& arrangement, const Globals& g) {
    Json doc = read_json(file);
    const std::string type = doc.value("type", "");
    if (type == "freeness-certificate") {
        Replay r = replay(certificate_from_json(doc), g.budget.search().poset);
        fmt::print("{}\n", r.ok ? "ok" : "FAILED: " + r.message);
        return r.ok ? kOk : kMismatch;
    }
    if (type == "accuracy-witness") {
        Arrangement a = !arrangement.empty() ? load(arrangement)
                        : doc.contains("arrangement") ? arrangement_from_json(doc["arrangement"])
                                                      : throw InputError("witness has no arrangement; pass --arrangement");
        std::string why;
        bool ok = check_witness(a, witness_from_json(doc, a.dim()), &why, g.budget.search());
        fmt::print("{}\n", ok ? "ok" : "FAILED: " + why);
        return ok ? kOk : kMismatch;
    }
    if (type == "job-result") {
        auto diffs = expectation_diffs(doc.at("expect"), doc.at("result"));
        for (const auto& d : diffs)
            fmt::print("FAILED: {}\n", d);
        if (diffs.empty())
            fmt::print("ok\n");
        return diffs.empty() ? kOk : kMismatch;
    }
    throw InputError(fmt::format("cannot verify a document of type '{}'", type));
}

int cmd_run(const std::string& source, const RunOptions& options, bool print, bool list) {
    if (list) {
        for (auto name : builtin_manifest_names())
            fmt::print("{}\n", name);
        return kOk;
    }
    const auto names = builtin_manifest_names();
    Manifest m = std::find(names.begin(), names.end(), source) != names.end() && !std::filesystem::exists(source)
                     ? builtin_manifest(source)
                     : manifest_from_json(read_json(source));
    if (print) {
        std::cout << dump(to_json(m));
        return kOk;
    }
    auto outcomes = run_manifest(m, options);
    std::cout << summary_table(outcomes);
    for (const auto& o : outcomes)
        for (const auto& d : o.diffs)
            fmt::print("{}: {}\n", o.name, d);
    return exit_code(outcomes);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperplane arrangements: characteristic polynomials, freeness certificates, accuracy witnesses."};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--budget-flats", g.budget.flats, "cap on intersection lattice size")->capture_default_str();
    app.add_option("--budget-depth", g.budget.depth, "cap on certificate search nodes")->capture_default_str();

    std::string file, out, method = "auto", kind = "flag", arrangement_path;
    bool as_json = false, coned = false;
    std::vector<std::size_t> hyperplanes;
    int code = kOk;

    auto* chi = app.add_subcommand("chi", "characteristic polynomial, expanded and factored");
    chi->add_option("file", file, "arrangement JSON")->required();
    chi->add_flag("--json", as_json, "emit {coeffs, roots}");
    chi->add_flag("--cone", coned, "use the cone of the arrangement");
    chi->callback([&] { code = cmd_chi(file, as_json, coned, g); });

    auto* cone_cmd = app.add_subcommand("cone", "cone of an affine arrangement (new coordinate last)");
    cone_cmd->add_option("file", file, "arrangement JSON")->required();
    cone_cmd->add_option("-o,--out", out, "output file (default stdout)");
    cone_cmd->callback([&] { emit(to_json(cone(load(file))), out); });

    auto* restrict_cmd = app.add_subcommand("restrict", "restriction to the flat cut out by the listed hyperplanes");
    restrict_cmd->add_option("file", file, "arrangement JSON")->required();
    restrict_cmd->add_option("-H,--hyperplane", hyperplanes, "hyperplane indices (0-based)")->required();
    restrict_cmd->add_option("-o,--out", out, "output file (default stdout)");
    restrict_cmd->callback([&] {
        Arrangement a = load(file);
        emit(to_json(restrict(a, flat_of(a, hyperplanes))), out);
    });

    auto* localize_cmd = app.add_subcommand("localize", "localization at the flat cut out by the listed hyperplanes");
    localize_cmd->add_option("file", file, "arrangement JSON")->required();
    localize_cmd->add_option("-H,--hyperplane", hyperplanes, "hyperplane indices (0-based)")->required();
    localize_cmd->add_option("-o,--out", out, "output file (default stdout)");
    localize_cmd->callback([&] {
        Arrangement a = load(file);
        emit(to_json(localize(a, flat_of(a, hyperplanes))), out);
    });

    auto* free_cmd = app.add_subcommand("free", "certify freeness and write the certificate");
    free_cmd->add_option("file", file, "arrangement JSON")->required();
    free_cmd->add_option("--method", method, "auto|supersolvable|inductive|divisional|mat")->capture_default_str();
    free_cmd->add_option("--cert", out, "certificate path (default <file stem>.cert.json)");
    free_cmd->callback([&] { code = cmd_free(file, method, out, g); });

    std::size_t accuracy_budget = 0;
    auto* acc = app.add_subcommand("accuracy", "flag / accuracy witnesses or the full profile");
    acc->add_option("file", file, "arrangement JSON (central, free)")->required();
    acc->add_option("--kind", kind, "flag|accurate|profile")->capture_default_str();
    acc->add_option("--budget", accuracy_budget, "lattice budget for this run (overrides --budget-flats)");
    acc->add_option("-o,--out", out, "output file (default stdout)");
    acc->callback([&] { code = cmd_accuracy(file, kind, accuracy_budget, out, g); });

    std::vector<std::string> checks;
    std::string builder;
    std::size_t n = 3, k = 1, l = 4;
    std::vector<Int> weights;
    auto* graph = app.add_subcommand("graph", "graph checks on a graph file or a named builder");
    graph->add_option("file", file, "graph JSON {n, edges}");
    graph->add_option("--check", checks, "chordal|strong|class-g|free|mat|accuracy (repeatable; default chordal, strong, class-g, accuracy)");
    graph->add_option("--builder", builder,
                      "sun|q4-ext|q|complete|cycle|example-not-accurate|example-not-accurate-extended|example-strong-not-g");
    graph->add_option("--n", n, "vertices for sun, complete, cycle")->capture_default_str();
    graph->add_option("--k", k, "extension count for q4-ext")->capture_default_str();
    graph->add_option("--l", l, "inner clique size for q")->capture_default_str();
    graph->add_option("--weights", weights, "outer triangle counts for q, pairs in lexicographic order");
    graph->callback([&] {
        if (file.empty() == builder.empty())
            throw InputError("give exactly one of a graph file or --builder");
        code = cmd_graph(file, Json{{"builder", builder}, {"n", n}, {"k", k}, {"l", l}, {"weights", weights}}, checks, g);
    });

    std::string type, check = "flag-accuracy";
    bool all = false, roots = false;
    std::vector<std::size_t> ideal;
    auto* ideal_cmd = app.add_subcommand("ideal", "ideal arrangements of a root system");
    ideal_cmd->add_option("--type", type, "root system label, e.g. B3")->required();
    ideal_cmd->add_flag("--all", all, "every order ideal, one JSON line each");
    ideal_cmd->add_option("--ideal", ideal, "root indices of one ideal")->delimiter(',');
    ideal_cmd->add_option("--check", check, "flag-accuracy|mat|none")->capture_default_str();
    ideal_cmd->add_flag("--roots", roots, "print the root poset as DOT");
    ideal_cmd->callback([&] { code = cmd_ideal(type, all, ideal, check, roots, g); });

    DeformationSpec spec;
    std::string family = "extshi", witness = "auto";
    bool validate_deform = false;
    auto* deform = app.add_subcommand("deform", "build or validate a deformation");
    deform->add_option("--family", family,
                       "extshi|extcat|idealshi|shiminus|bfam|cfam|ctilde|dfam|ffam|hfam|efam")->capture_default_str();
    deform->add_option("--base", spec.base, "root system for root-based families");
    deform->add_option("--m", spec.m)->capture_default_str();
    deform->add_option("--a", spec.a)->capture_default_str();
    deform->add_option("--n", spec.n)->capture_default_str();
    deform->add_option("--p", spec.p)->capture_default_str();
    deform->add_option("--l", spec.l)->capture_default_str();
    deform->add_option("--r", spec.r)->capture_default_str();
    deform->add_option("--ideal", spec.ideal, "order ideal (idealshi)")->delimiter(',');
    deform->add_option("--simples", spec.simples, "removed simple roots (shiminus)")->delimiter(',');
    deform->add_flag("--cone", coned, "print the cone");
    deform->add_flag("--validate", validate_deform, "check chi, certify freeness of the cone, build a flag witness");
    deform->add_option("--witness", witness, "auto|simple-root|cat|bc|hfam|efam|search|none")->capture_default_str();
    deform->callback([&] {
        auto f = family_from_name(family);
        if (!f)
            throw InputError(fmt::format("unknown family '{}'", family));
        spec.family = *f;
        validate_parameters(spec);
        code = cmd_deform(spec, coned, validate_deform, witness, g);
    });

    DescendantSpec ds;
    std::string genealogy = "shi";
    std::optional<std::size_t> row;
    bool validate_rows = false;
    auto* descend = app.add_subcommand("descend", "descendant matrices of the Shi and Catalan genealogies");
    descend->add_option("--genealogy", genealogy, "shi|catalan")->capture_default_str();
    descend->add_option("--l", ds.l)->capture_default_str();
    descend->add_option("--m", ds.m)->capture_default_str();
    descend->add_option("--d", ds.d, "Shi only")->capture_default_str();
    descend->add_option("--c", ds.c, "Catalan only")->capture_default_str();
    descend->add_option("--row", row, "row index p (default all rows)");
    descend->add_flag("--validate-row", validate_rows, "validate every cell of the selected rows");
    descend->callback([&] {
        auto gg = genealogy_from_name(genealogy);
        if (!gg)
            throw InputError(fmt::format("unknown genealogy '{}'", genealogy));
        ds.genealogy = *gg;
        validate(ds);
        code = cmd_descend(ds, row, validate_rows, g);
    });

    auto* verify = app.add_subcommand("verify", "replay a certificate, witness, or job result");
    verify->add_option("file", file, "JSON document")->required();
    verify->add_option("--arrangement", arrangement_path, "arrangement for a witness without one");
    verify->callback([&] { code = cmd_verify(file, arrangement_path, g); });

    RunOptions run_options;
    std::string out_dir;
    bool print = false, list = false, no_write = false;
    auto* run = app.add_subcommand("run", "run an experiment manifest (file or bundled name)");
    run->add_option("manifest", file, "manifest JSON or bundled name (desk-scale)");
    run->add_option("--out", out_dir, "output directory (default: the manifest's)");
    run->add_option("--jobs", run_options.threads, "jobs run in parallel")->capture_default_str();
    run->add_option("--only", run_options.only, "run only the named jobs");
    run->add_flag("--no-write", no_write, "do not write result files");
    run->add_flag("--print", print, "print the manifest JSON and exit");
    run->add_flag("--list", list, "list bundled manifests");
    run->callback([&] {
        if (file.empty() && !list)
            throw InputError("run needs a manifest");
        if (!out_dir.empty())
            run_options.output = out_dir;
        run_options.write = !no_write;
        code = cmd_run(file, run_options, print, list);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int status = app.exit(e);
        return status == 0 ? kOk : kInput;
    } catch (const InputError& e) {
        fmt::print(stderr, "input error: {}\n", e.what());
        return kInput;
    } catch (const BudgetExceeded& e) {
        fmt::print(stderr, "budget exhausted: {} ({} visited)\n", e.what(), e.count());
        return kBudget;
    } catch (const ArithmeticOverflow& e) {
        fmt::print(stderr, "overflow: {}\n", e.what());
        return kInput;
    }
    return code;
}
