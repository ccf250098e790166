#pragma once

#include <cstdint>
#include <string>

#include "mmopt/core.hpp"
#include "mmopt/rng.hpp"

namespace mmopt {

/// Two readings of the neighbourhood trial step. ProseNTrials draws one
/// trial point per neighbour (n evaluations per particle per iteration);
/// PseudocodeBestNeighbor picks the fittest neighbour and draws a single
/// trial (one evaluation).
enum class LocalSearchVariant {
    ProseNTrials,
    PseudocodeBestNeighbor,
};

std::string local_search_variant_name(LocalSearchVariant variant);

/// Accepts "prose" or "pseudocode"; anything else throws with the valid
/// names listed.
LocalSearchVariant parse_local_search_variant(const std::string& name);

struct LocalSearchConfig {
    bool enabled = true;
    int n_neighbors = 3;
    double c1_ls = 1.49618;
    LocalSearchVariant variant = LocalSearchVariant::ProseNTrials;
    /// When set, each particle redraws its neighbour count uniformly from
    /// [1, n_neighbors] before searching.
    bool n_randomized = false;

    void validate() const;
};

/// Indices of the n personal bests closest to particle i's personal best,
/// ascending by distance, ties broken toward the lower index. Requires
/// n < swarm size.
std::vector<int> n_nearest_neighbors(int i, const Swarm& swarm, int n);

/// Trial point for one neighbour: step toward it when it is at least as
/// fit, away otherwise, one uniform draw per dimension, clamped to the box.
Vec trial_point(const Vec& pbest_i, double pbest_fitness_i,
                const Vec& neighbor_position, double neighbor_fitness,
                double c1_ls, const Bounds& bounds, RngStream& rng);

/// Run the configured local search for particle i, replacing its personal
/// best in place when a trial strictly improves it. Returns the number of
/// objective evaluations consumed.
std::uint64_t local_search_improve(int i, Swarm& swarm, const LocalSearchConfig& config,
                                   const Bounds& bounds, Evaluator& evaluator,
                                   RngStream& rng);

} // namespace mmopt
