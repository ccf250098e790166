#include "mmopt/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mmopt/optimizers.hpp"
#include "mmopt/rng.hpp"

namespace mmopt {
namespace {

/// Fixed-format double for CSV cells: round-trippable and platform-stable.
std::string g17(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

/// Compact double for the human-readable report row.
std::string g6(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::string run_file_name(int run_index, const char* kind) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "run_%03d_%s.csv", run_index, kind);
    return buffer;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write output file: " + path.string());
    }
    return out;
}

nlohmann::json counters_json(const EvalCounters& counters) {
    return nlohmann::json{{"init", counters.init},
                          {"main_loop", counters.main_loop},
                          {"local_search", counters.local_search},
                          {"total", counters.total()}};
}

void write_summary_json(const std::filesystem::path& path, const ExperimentSpec& spec,
                        const OptimaCatalog& catalog, const ExperimentOutput& output) {
    nlohmann::json doc;
    doc["format_version"] = 1;
    doc["function"] = function_name(spec.function_id);
    doc["algorithm"] = algorithm_name(spec.swarm.algorithm);
    doc["population"] = spec.swarm.population;
    doc["iterations"] = spec.swarm.iterations;
    doc["runs"] = spec.runs;
    doc["base_seed"] = spec.base_seed;
    doc["swarm"] = {{"w", spec.swarm.w},
                    {"c1", spec.swarm.c1},
                    {"c2", spec.swarm.c2},
                    {"vmax_fraction", spec.swarm.vmax_fraction},
                    {"n_neighbors", spec.swarm.n_neighbors}};
    doc["local_search"] = {{"enabled", spec.local_search.enabled},
                           {"variant", local_search_variant_name(spec.local_search.variant)},
                           {"n_neighbors", spec.local_search.n_neighbors},
                           {"c1", spec.local_search.c1_ls},
                           {"n_randomized", spec.local_search.n_randomized}};
    doc["trajectory"] = {{"enabled", spec.write_trajectory},
                         {"stride", spec.trajectory_stride}};
    doc["catalog"] = {{"function", function_name(catalog.function_id)},
                      {"entries", catalog.entries.size()},
                      {"global_entries", catalog.global_count()}};
    doc["match"] = {{"position_epsilon", output.criteria.position_epsilon},
                    {"fitness_epsilon", output.criteria.fitness_epsilon}};
    doc["denominator"] = output.result.denominator;
    doc["found_per_run"] = output.result.found_per_run;
    doc["anof"] = output.result.anof;
    doc["peak_ratio"] = output.result.peak_ratio;
    doc["evaluations"] = counters_json(output.evaluations);
    nlohmann::json per_run = nlohmann::json::array();
    for (const RunRecord& record : output.per_run) {
        per_run.push_back({{"seed", record.seed},
                           {"found", record.found},
                           {"evaluations", counters_json(record.evaluations)}});
    }
    doc["per_run"] = per_run;

    std::ofstream out = open_output(path);
    out << doc.dump(2) << '\n';
}

} // namespace

void ExperimentSpec::validate() const {
    swarm.validate();
    local_search.validate();
    if (runs < 1) {
        throw std::invalid_argument("experiment requires runs >= 1");
    }
    if (trajectory_stride < 1) {
        throw std::invalid_argument("trajectory stride must be >= 1");
    }
    if (write_trajectory && !output_dir) {
        throw std::invalid_argument("trajectory output requires an output directory");
    }
    if (position_epsilon && !(*position_epsilon > 0.0)) {
        throw std::invalid_argument("position epsilon override must be positive");
    }
    if (fitness_epsilon && !(*fitness_epsilon > 0.0)) {
        throw std::invalid_argument("fitness epsilon override must be positive");
    }
    if (denominator_override && *denominator_override <= 0) {
        throw std::invalid_argument("denominator override must be positive");
    }
}

ExperimentOutput run_experiment(const ExperimentSpec& spec, const OptimaCatalog& catalog) {
    spec.validate();
    if (catalog.function_id != spec.function_id) {
        throw std::invalid_argument(std::string("catalog describes ") +
                                    function_name(catalog.function_id) +
                                    " but the experiment targets " +
                                    function_name(spec.function_id));
    }
    const BenchmarkFunction fn = benchmark(spec.function_id);
    const Bounds& bounds = fn.bounds;

    MatchCriteria criteria = default_criteria(bounds);
    if (spec.position_epsilon) {
        criteria.position_epsilon = *spec.position_epsilon;
    }
    if (spec.fitness_epsilon) {
        criteria.fitness_epsilon = *spec.fitness_epsilon;
    }
    criteria.validate();

    const int denominator =
        spec.denominator_override.value_or(static_cast<int>(catalog.entries.size()));

    if (spec.output_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*spec.output_dir, ec);
        if (ec) {
            throw std::runtime_error("cannot create output directory: " +
                                     spec.output_dir->string() + " (" + ec.message() + ")");
        }
    }

    ExperimentOutput output;
    output.criteria = criteria;
    std::vector<int> found_per_run;
    found_per_run.reserve(static_cast<std::size_t>(spec.runs));

    for (int k = 0; k < spec.runs; ++k) {
        RunRecord record;
        record.seed = spec.base_seed + static_cast<std::uint64_t>(k);
        SwarmConfig config = spec.swarm;
        config.seed = record.seed;
        RngStream rng(record.seed);
        Evaluator evaluator([&fn](const Vec& x) { return fn.evaluate(x); });

        Swarm swarm = init_swarm(config, bounds, evaluator, rng);
        record.evaluations.init = evaluator.evaluations();

        std::ofstream trajectory;
        if (spec.write_trajectory) {
            trajectory = open_output(*spec.output_dir / run_file_name(k, "trajectory"));
            trajectory << "run,iteration,particle,x1,x2,f\n";
        }

        std::uint64_t ls_evals = 0;
        for (int t = 1; t <= config.iterations; ++t) {
            ls_evals += step(swarm, config, spec.local_search, bounds, evaluator, rng);
            const bool sampled = t == 1 || t % spec.trajectory_stride == 0;
            if (spec.write_trajectory && sampled) {
                for (std::size_t i = 0; i < swarm.size(); ++i) {
                    const Particle& particle = swarm[i];
                    trajectory << k << ',' << t << ',' << i;
                    for (double x : particle.position) {
                        trajectory << ',' << g17(x);
                    }
                    trajectory << ',' << g17(-particle.fitness) << '\n';
                }
            }
        }
        record.evaluations.local_search = ls_evals;
        record.evaluations.main_loop =
            evaluator.evaluations() - record.evaluations.init - ls_evals;

        const std::vector<Candidate> candidates =
            extract_candidates(swarm, criteria.position_epsilon);
        record.found = count_found_optima(candidates, catalog, criteria);
        found_per_run.push_back(record.found);

        if (spec.output_dir) {
            std::ofstream csv = open_output(*spec.output_dir / run_file_name(k, "candidates"));
            csv << "candidate,x1,x2,f\n";
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                csv << c;
                for (double x : candidates[c].position) {
                    csv << ',' << g17(x);
                }
                csv << ',' << g17(candidates[c].value) << '\n';
            }
        }

        output.evaluations.init += record.evaluations.init;
        output.evaluations.main_loop += record.evaluations.main_loop;
        output.evaluations.local_search += record.evaluations.local_search;
        output.per_run.push_back(std::move(record));
    }

    output.result = aggregate(spec.function_id, spec.swarm.algorithm, spec.swarm.population,
                              spec.swarm.iterations, found_per_run, denominator);

    if (spec.output_dir) {
        write_summary_json(*spec.output_dir / "summary.json", spec, catalog, output);
        std::ofstream tsv = open_output(*spec.output_dir / "summary.tsv");
        tsv << report_header() << '\n' << report_row(output) << '\n';
    }
    return output;
}

std::string report_header() {
    return "function\talgorithm\tpopulation\titerations\truns\tbase_seed\tdenominator"
           "\tanof\tpeak_ratio\tevals_init\tevals_main\tevals_local_search\tevals_total";
}

std::string report_row(const ExperimentOutput& output) {
    const ExperimentResult& result = output.result;
    const std::uint64_t base_seed = output.per_run.empty() ? 0 : output.per_run.front().seed;
    std::string row;
    row += function_name(result.function_id);
    row += '\t';
    row += algorithm_name(result.algorithm);
    row += '\t';
    row += std::to_string(result.population);
    row += '\t';
    row += std::to_string(result.iterations);
    row += '\t';
    row += std::to_string(result.runs);
    row += '\t';
    row += std::to_string(base_seed);
    row += '\t';
    row += std::to_string(result.denominator);
    row += '\t';
    row += g6(result.anof);
    row += '\t';
    row += g6(result.peak_ratio);
    row += '\t';
    row += std::to_string(output.evaluations.init);
    row += '\t';
    row += std::to_string(output.evaluations.main_loop);
    row += '\t';
    row += std::to_string(output.evaluations.local_search);
    row += '\t';
    row += std::to_string(output.evaluations.total());
    return row;
}

} // namespace mmopt
