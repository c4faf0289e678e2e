// Runs the bundled acceptance manifest and prints one PASS/FAIL line per criterion.
#include "arrlab/experiments.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <array>
#include <map>

namespace {

constexpr std::array<const char*, 10> kTitles{
    "characteristic polynomials and the coning identity",
    "extended Shi cones: exponents and simple-root flag witnesses",
    "extended Catalan and B/C deformations: exponents, freeness, witnesses",
    "graphic arrangements: non-accurate examples and exact coaccuracy",
    "suns: flag-accurate without being strongly chordal",
    "graphs up to 6 vertices: free iff chordal, MAT iff strongly chordal",
    "ideal arrangements of A3, B3, B2: MAT partitions and flag-accuracy",
    "descendant matrices: closed forms, exponents, ind-flag witnesses",
    "N-Ish arrangements: nested ones certified, others not",
    "randomized properties: factorization, addition-deletion, determinism, mutation",
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance suite: one line per criterion."};
    std::string out;
    std::size_t jobs = 1;
    bool verbose = false;
    app.add_option("--out", out, "write job results to this directory");
    app.add_option("--jobs", jobs, "jobs run in parallel")->capture_default_str();
    app.add_flag("-v,--verbose", verbose, "print the per-job table");
    CLI11_PARSE(app, argc, argv);

    auto manifest = arrlab::builtin_manifest("desk-scale");
    arrlab::RunOptions options;
    options.threads = jobs;
    options.write = !out.empty();
    if (!out.empty())
        options.output = out;
    auto outcomes = arrlab::run_manifest(manifest, options);
    if (verbose)
        fmt::print("{}\n", arrlab::summary_table(outcomes));

    struct Tally {
        std::size_t jobs = 0, passed = 0;
        double seconds = 0;
        std::vector<std::string> failed;
    };
    std::map<int, Tally> by_criterion;
    for (const auto& o : outcomes) {
        if (!o.criterion)
            continue;
        auto& t = by_criterion[*o.criterion];
        ++t.jobs;
        t.seconds += o.seconds;
        if (o.status == arrlab::JobStatus::Pass)
            ++t.passed;
        else
            t.failed.push_back(fmt::format("{} [{}] {}", o.name, arrlab::status_name(o.status),
                                           !o.message.empty() ? o.message : o.diffs.empty() ? "" : o.diffs.front()));
    }

    int failures = 0;
    for (int c = 1; c <= static_cast<int>(kTitles.size()); ++c) {
        const Tally& t = by_criterion[c];
        const bool pass = t.jobs > 0 && t.passed == t.jobs;
        failures += !pass;
        fmt::print("{} {:>2} {} ({}/{} jobs, {:.1f}s)\n", pass ? "PASS" : "FAIL", c, kTitles[c - 1], t.passed, t.jobs,
                   t.seconds);
        for (const auto& f : t.failed)
            fmt::print("        {}\n", f);
    }
    return failures == 0 ? 0 : 1;
}
