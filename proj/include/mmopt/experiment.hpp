#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "mmopt/benchmarks.hpp"
#include "mmopt/catalog.hpp"
#include "mmopt/core.hpp"
#include "mmopt/local_search.hpp"
#include "mmopt/metrics.hpp"

namespace mmopt {

/// Full description of a batch experiment. Run k (0-based) executes with
/// seed base_seed + k, so any individual run can be reproduced in
/// isolation.
struct ExperimentSpec {
    FunctionId function_id = FunctionId::F1SixHumpCamel;
    /// Swarm parameters; the seed field is overwritten per run.
    SwarmConfig swarm;
    LocalSearchConfig local_search;
    int runs = 10;
    std::uint64_t base_seed = 1;
    /// Match-criteria overrides; unset fields take the catalog defaults.
    std::optional<double> position_epsilon;
    std::optional<double> fitness_epsilon;
    /// Peak-ratio denominator; defaults to the catalog size.
    std::optional<int> denominator_override;
    bool write_trajectory = false;
    int trajectory_stride = 1;
    /// When set, result artifacts are written here (summary.json,
    /// summary.tsv, per-run candidate CSVs, optional trajectory CSVs).
    std::optional<std::filesystem::path> output_dir;

    void validate() const;
};

/// Objective-evaluation budget split by phase.
struct EvalCounters {
    std::uint64_t init = 0;
    std::uint64_t main_loop = 0;
    std::uint64_t local_search = 0;

    std::uint64_t total() const { return init + main_loop + local_search; }
};

struct RunRecord {
    std::uint64_t seed = 0;
    int found = 0;
    EvalCounters evaluations;
};

struct ExperimentOutput {
    ExperimentResult result;
    MatchCriteria criteria;
    std::vector<RunRecord> per_run;
    /// Sum over runs.
    EvalCounters evaluations;
};

/// Execute all runs sequentially in run-index order and aggregate. The
/// catalog must describe spec.function_id. Artifacts (when output_dir is
/// set) contain no timestamps: identical spec + catalog reproduce them
/// byte for byte.
ExperimentOutput run_experiment(const ExperimentSpec& spec, const OptimaCatalog& catalog);

/// One-line, tab-separated report row (matches the summary.tsv layout).
std::string report_row(const ExperimentOutput& output);
std::string report_header();

} // namespace mmopt
