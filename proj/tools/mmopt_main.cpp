#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmopt/catalog.hpp"
#include "mmopt/experiment.hpp"

namespace {

int cmd_run(const std::string& function, const std::string& algorithm, int particles,
            int iterations, int runs, std::uint64_t seed, int n_neighbors,
            const std::string& ls_variant, double w, double c1, double c2,
            double vmax_fraction, bool has_ls_c1, double ls_c1, bool ls_randomized,
            double position_epsilon, double fitness_epsilon, int denominator_override,
            bool trajectory, int stride, const std::string& out_dir,
            const std::string& catalog_path) {
    mmopt::ExperimentSpec spec;
    spec.function_id = mmopt::parse_function(function);
    spec.swarm.algorithm = mmopt::parse_algorithm(algorithm);
    spec.swarm.population = particles;
    spec.swarm.iterations = iterations;
    spec.swarm.w = w;
    spec.swarm.c1 = c1;
    spec.swarm.c2 = c2;
    spec.swarm.vmax_fraction = vmax_fraction;
    spec.swarm.n_neighbors = n_neighbors;
    spec.runs = runs;
    spec.base_seed = seed;

    spec.local_search.n_neighbors = n_neighbors;
    spec.local_search.c1_ls = has_ls_c1 ? ls_c1 : c1;
    spec.local_search.n_randomized = ls_randomized;
    if (ls_variant == "off") {
        spec.local_search.enabled = false;
    } else {
        spec.local_search.variant = mmopt::parse_local_search_variant(ls_variant);
    }

    if (position_epsilon > 0.0) {
        spec.position_epsilon = position_epsilon;
    }
    if (fitness_epsilon > 0.0) {
        spec.fitness_epsilon = fitness_epsilon;
    }
    if (denominator_override > 0) {
        spec.denominator_override = denominator_override;
    }
    spec.write_trajectory = trajectory;
    spec.trajectory_stride = stride;
    if (!out_dir.empty()) {
        spec.output_dir = std::filesystem::path(out_dir);
    }

    mmopt::OptimaCatalog catalog;
    if (!catalog_path.empty()) {
        catalog = mmopt::load_catalog(catalog_path);
    } else {
        catalog = mmopt::build_catalog(spec.function_id, mmopt::CatalogParams{});
    }

    const mmopt::ExperimentOutput output = mmopt::run_experiment(spec, catalog);
    std::cout << mmopt::report_header() << '\n' << mmopt::report_row(output) << '\n';
    return 0;
}

int cmd_catalog(const std::string& function, double grid_step, double tolerance,
                const std::string& out_path) {
    const mmopt::FunctionId id = mmopt::parse_function(function);
    mmopt::CatalogParams params;
    params.grid_step = grid_step;
    params.position_tolerance = tolerance;
    const mmopt::OptimaCatalog catalog = mmopt::build_catalog(id, params);
    mmopt::save_catalog(catalog, out_path);
    std::cout << mmopt::function_name(id) << ": " << catalog.entries.size()
              << " entries (" << catalog.global_count() << " global) -> " << out_path
              << '\n';
    return 0;
}

int cmd_report(const std::string& dir, int denominator_override) {
    const std::filesystem::path summary_path = std::filesystem::path(dir) / "summary.json";
    std::ifstream in(summary_path);
    if (!in) {
        throw std::runtime_error("cannot open " + summary_path.string());
    }
    const nlohmann::json doc = nlohmann::json::parse(in);

    const std::vector<int> found = doc.at("found_per_run").get<std::vector<int>>();
    const int denominator =
        denominator_override > 0 ? denominator_override : doc.at("denominator").get<int>();

    mmopt::ExperimentOutput output;
    output.result = mmopt::aggregate(
        mmopt::parse_function(doc.at("function").get<std::string>()),
        mmopt::parse_algorithm(doc.at("algorithm").get<std::string>()),
        doc.at("population").get<int>(), doc.at("iterations").get<int>(), found,
        denominator);
    mmopt::RunRecord first;
    first.seed = doc.at("base_seed").get<std::uint64_t>();
    output.per_run.push_back(first);
    const nlohmann::json& evals = doc.at("evaluations");
    output.evaluations.init = evals.at("init").get<std::uint64_t>();
    output.evaluations.main_loop = evals.at("main_loop").get<std::uint64_t>();
    output.evaluations.local_search = evals.at("local_search").get<std::uint64_t>();

    std::cout << mmopt::report_header() << '\n' << mmopt::report_row(output) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multimodal particle-swarm laboratory"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "INI config file; keys live in a section per subcommand "
                   "(e.g. [run]) and explicit flags win");

    // --- run ---
    auto* run = app.add_subcommand("run", "Run a seeded batch experiment and report "
                                          "ANOF / peak ratio");
    std::string function;
    std::string algorithm = "lsepso";
    int particles = 30;
    int iterations = 60;
    int runs = 10;
    std::uint64_t seed = 1;
    int n_neighbors = 3;
    std::string ls_variant = "prose";
    double w = 0.7298;
    double c1 = 1.49618;
    double c2 = 1.49618;
    double vmax_fraction = 0.5;
    double ls_c1 = 0.0;
    bool ls_randomized = false;
    double position_epsilon = 0.0;
    double fitness_epsilon = 0.0;
    int denominator_override = 0;
    bool trajectory = false;
    int stride = 1;
    std::string out_dir;
    std::string catalog_path;

    run->add_option("--function", function, "Benchmark: f1, f2, f3, f4, f5")->required();
    run->add_option("--algorithm", algorithm, "pso, epso, ferpso, lsepso");
    run->add_option("--particles", particles, "Swarm size");
    run->add_option("--iterations", iterations, "Main-loop iterations");
    run->add_option("--runs", runs, "Independent replications");
    run->add_option("--seed", seed, "Base seed; run k uses seed + k");
    run->add_option("--n-neighbors", n_neighbors, "Local-search neighborhood size");
    run->add_option("--ls-variant", ls_variant,
                    "Local-search reading: prose, pseudocode, or off");
    run->add_option("--w", w, "Inertia weight");
    run->add_option("--c1", c1, "Cognitive coefficient");
    run->add_option("--c2", c2, "Social coefficient");
    run->add_option("--vmax-fraction", vmax_fraction,
                    "Velocity cap as a fraction of box width");
    auto* ls_c1_opt = run->add_option("--ls-c1", ls_c1,
                                      "Local-search step coefficient (default: --c1)");
    run->add_flag("--ls-randomized", ls_randomized,
                  "Redraw each particle's neighbor count from [1, n] per iteration");
    run->add_option("--position-epsilon", position_epsilon,
                    "Match radius override (default: 5% of widest box side)");
    run->add_option("--fitness-epsilon", fitness_epsilon,
                    "Objective-value accuracy for a match (default: 1e-6)");
    run->add_option("--denominator-override", denominator_override,
                    "Peak-ratio denominator (default: catalog size)");
    run->add_flag("--trajectory", trajectory, "Write per-run trajectory CSVs");
    run->add_option("--stride", stride, "Trajectory sampling stride");
    run->add_option("--out", out_dir, "Output directory for result artifacts");
    run->add_option("--catalog", catalog_path,
                    "Load a saved catalog instead of rebuilding it");

    // --- catalog ---
    auto* cat = app.add_subcommand("catalog", "Build and save an optima catalog");
    std::string cat_function;
    double grid_step = 0.0;
    double tolerance = 0.0;
    std::string cat_out;
    cat->add_option("--function", cat_function, "Benchmark: f1, f2, f3, f4, f5")->required();
    cat->add_option("--grid-step", grid_step,
                    "Seeding grid step (default: widest box side / 500)");
    cat->add_option("--tolerance", tolerance,
                    "Position tolerance (default: widest box side / 200)");
    cat->add_option("--out", cat_out, "Catalog JSON path")->required();

    // --- report ---
    auto* rep = app.add_subcommand("report", "Re-aggregate a stored experiment");
    std::string rep_dir;
    int rep_denominator = 0;
    rep->add_option("dir", rep_dir, "Experiment output directory")->required();
    rep->add_option("--denominator-override", rep_denominator,
                    "Recompute peak ratio against this denominator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (run->parsed()) {
            return cmd_run(function, algorithm, particles, iterations, runs, seed,
                           n_neighbors, ls_variant, w, c1, c2, vmax_fraction,
                           ls_c1_opt->count() > 0, ls_c1, ls_randomized, position_epsilon,
                           fitness_epsilon, denominator_override, trajectory, stride,
                           out_dir, catalog_path);
        }
        if (cat->parsed()) {
            return cmd_catalog(cat_function, grid_step, tolerance, cat_out);
        }
        if (rep->parsed()) {
            return cmd_report(rep_dir, rep_denominator);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
