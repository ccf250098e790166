#include "mmopt/local_search.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mmopt {

std::string local_search_variant_name(LocalSearchVariant variant) {
    switch (variant) {
        case LocalSearchVariant::ProseNTrials: return "prose";
        case LocalSearchVariant::PseudocodeBestNeighbor: return "pseudocode";
    }
    throw std::invalid_argument("unknown local search variant");
}

LocalSearchVariant parse_local_search_variant(const std::string& name) {
    if (name == "prose") {
        return LocalSearchVariant::ProseNTrials;
    }
    if (name == "pseudocode") {
        return LocalSearchVariant::PseudocodeBestNeighbor;
    }
    throw std::invalid_argument("unknown local search variant '" + name +
                                "' (valid: prose, pseudocode)");
}

void LocalSearchConfig::validate() const {
    if (n_neighbors < 1) {
        throw std::invalid_argument("local search requires n_neighbors >= 1");
    }
    if (c1_ls <= 0.0) {
        throw std::invalid_argument("local search requires c1_ls > 0");
    }
}

std::vector<int> n_nearest_neighbors(int i, const Swarm& swarm, int n) {
    const int size = static_cast<int>(swarm.size());
    if (i < 0 || i >= size) {
        throw std::invalid_argument("particle index out of range");
    }
    if (n < 1 || n >= size) {
        throw std::invalid_argument("neighbor count must be in [1, swarm size)");
    }
    const Vec& center = swarm[static_cast<std::size_t>(i)].pbest_position;
    std::vector<std::pair<double, int>> by_distance;
    by_distance.reserve(static_cast<std::size_t>(size) - 1);
    for (int j = 0; j < size; ++j) {
        if (j == i) {
            continue;
        }
        const Vec& other = swarm[static_cast<std::size_t>(j)].pbest_position;
        double d2 = 0.0;
        for (std::size_t d = 0; d < center.size(); ++d) {
            const double diff = other[d] - center[d];
            d2 += diff * diff;
        }
        by_distance.emplace_back(d2, j);
    }
    // Pair ordering gives the distance tie-break toward the lower index.
    std::sort(by_distance.begin(), by_distance.end());
    std::vector<int> result;
    result.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        result.push_back(by_distance[static_cast<std::size_t>(k)].second);
    }
    return result;
}

Vec trial_point(const Vec& pbest_i, double pbest_fitness_i,
                const Vec& neighbor_position, double neighbor_fitness,
                double c1_ls, const Bounds& bounds, RngStream& rng) {
    if (pbest_i.size() != neighbor_position.size()) {
        throw std::invalid_argument("trial_point requires matching dimensions");
    }
    const double sign = neighbor_fitness >= pbest_fitness_i ? 1.0 : -1.0;
    Vec trial(pbest_i.size());
    for (std::size_t d = 0; d < trial.size(); ++d) {
        const double diff = neighbor_position[d] - pbest_i[d];
        trial[d] = pbest_i[d] + sign * c1_ls * rng.uniform() * diff;
    }
    bounds.clamp(trial);
    return trial;
}

std::uint64_t local_search_improve(int i, Swarm& swarm, const LocalSearchConfig& config,
                                   const Bounds& bounds, Evaluator& evaluator,
                                   RngStream& rng) {
    config.validate();
    if (!config.enabled) {
        return 0;
    }
    const int size = static_cast<int>(swarm.size());
    if (i < 0 || i >= size) {
        throw std::invalid_argument("particle index out of range");
    }
    if (size < 2) {
        return 0; // no neighbours to learn from
    }
    int n = std::min(config.n_neighbors, size - 1);
    if (config.n_randomized) {
        n = rng.uniform_int(1, n);
    }
    Particle& particle = swarm[static_cast<std::size_t>(i)];
    const std::vector<int> neighbors = n_nearest_neighbors(i, swarm, n);

    std::uint64_t evals = 0;
    if (config.variant == LocalSearchVariant::ProseNTrials) {
        bool have_best = false;
        Vec best_trial;
        double best_fitness = 0.0;
        for (int j : neighbors) {
            const Particle& neighbor = swarm[static_cast<std::size_t>(j)];
            Vec trial = trial_point(particle.pbest_position, particle.pbest_fitness,
                                    neighbor.pbest_position, neighbor.pbest_fitness,
                                    config.c1_ls, bounds, rng);
            const double fitness = evaluator.fitness(trial);
            ++evals;
            if (!have_best || fitness > best_fitness) {
                have_best = true;
                best_trial = std::move(trial);
                best_fitness = fitness;
            }
        }
        if (have_best && best_fitness > particle.pbest_fitness) {
            particle.pbest_position = std::move(best_trial);
            particle.pbest_fitness = best_fitness;
        }
    } else {
        // Single trial toward (or away from) the fittest of the n nearest;
        // equal fitness resolves to the lower particle index.
        int best_j = neighbors.front();
        for (int j : neighbors) {
            const double fit_j = swarm[static_cast<std::size_t>(j)].pbest_fitness;
            const double fit_best = swarm[static_cast<std::size_t>(best_j)].pbest_fitness;
            if (fit_j > fit_best || (fit_j == fit_best && j < best_j)) {
                best_j = j;
            }
        }
        const Particle& neighbor = swarm[static_cast<std::size_t>(best_j)];
        Vec trial = trial_point(particle.pbest_position, particle.pbest_fitness,
                                neighbor.pbest_position, neighbor.pbest_fitness,
                                config.c1_ls, bounds, rng);
        const double fitness = evaluator.fitness(trial);
        ++evals;
        if (fitness > particle.pbest_fitness) {
            particle.pbest_position = std::move(trial);
            particle.pbest_fitness = fitness;
        }
    }
    return evals;
}

} // namespace mmopt
