#pragma once

#include "arrlab/io.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arrlab {

struct Budget {
    std::size_t flats = PosetOptions{}.max_flats;  // intersection lattice size cap
    std::size_t depth = SearchOptions{}.max_nodes; // certificate search node cap
    SearchOptions search() const;
};

// One independent unit of work. `kind` selects the constructor and checks (see job_kinds());
// `params` configures it; `expect` is matched against the job's result document: every key in
// `expect` must be present in the result with an equal value, objects compared recursively.
struct Job {
    std::string name;
    std::string kind;
    Json params = Json::object();
    Json expect = Json::object();
    std::optional<int> criterion; // acceptance criterion the job contributes to
    std::string title;            // free text for summaries
    std::optional<Budget> budget; // overrides the manifest budget
};

struct Manifest {
    std::string name;
    std::filesystem::path output; // per-job certificates go here; empty for none
    Budget budget;
    std::vector<Job> jobs;
};

Json to_json(const Manifest& m);
// Rejects unknown job kinds, repeated job names and unknown top-level keys.
Manifest manifest_from_json(const Json& j);

struct JobKind {
    std::string_view name;
    std::string_view summary;
};
const std::vector<JobKind>& job_kinds();

// Runs one job and returns its result document (without schema tags). Throws InputError or
// BudgetExceeded.
Json run_job(const Job& job, const Budget& budget);

enum class JobStatus { Pass, Mismatch, Budget, Input, Error };
std::string_view status_name(JobStatus s);

struct JobOutcome {
    std::string name;
    std::optional<int> criterion;
    JobStatus status = JobStatus::Error;
    Json result;                    // null when the job threw
    std::vector<std::string> diffs; // expectation mismatches
    std::string message;            // exception text
    double seconds = 0;
};

// Paths of `expect` that `result` violates, as "path: expected X, got Y".
std::vector<std::string> expectation_diffs(const Json& expect, const Json& result);

struct RunOptions {
    std::size_t threads = 1;
    bool write = true; // write <output>/<job>.json and summary.json
    std::optional<std::filesystem::path> output; // overrides the manifest's directory
    std::vector<std::string> only;               // job names; empty means all
};

// Executes the jobs (up to `threads` at a time) and returns outcomes in manifest order. Files
// contain no timings, so re-runs are byte-identical.
std::vector<JobOutcome> run_manifest(const Manifest& m, const RunOptions& options = {});

std::string summary_table(const std::vector<JobOutcome>& outcomes);
// 0 all pass, 1 an expectation failed or a job errored, 2 budget exhaustion, 3 input error.
int exit_code(const std::vector<JobOutcome>& outcomes);

// Bundled manifests by name: "desk-scale" (the acceptance criteria).
std::vector<std::string_view> builtin_manifest_names();
Manifest builtin_manifest(std::string_view name);

} // namespace arrlab
