#include "mmopt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mmopt {
namespace {

double squared_distance(const Vec& a, const Vec& b) {
    double d2 = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        d2 += diff * diff;
    }
    return d2;
}

} // namespace

void MatchCriteria::validate() const {
    if (!(position_epsilon > 0.0) || !(fitness_epsilon > 0.0)) {
        throw std::invalid_argument("match tolerances must be positive");
    }
}

MatchCriteria default_criteria(const Bounds& bounds) {
    MatchCriteria criteria;
    criteria.position_epsilon = 0.05 * bounds.max_width();
    criteria.fitness_epsilon = 1e-6;
    criteria.validate();
    return criteria;
}

std::vector<Candidate> extract_candidates(const Swarm& swarm, double position_epsilon) {
    if (!(position_epsilon > 0.0)) {
        throw std::invalid_argument("position_epsilon must be positive");
    }
    std::vector<int> order(swarm.size());
    std::iota(order.begin(), order.end(), 0);
    // Fittest personal best first; stable_sort keeps equal fitnesses in
    // index order.
    std::stable_sort(order.begin(), order.end(), [&swarm](int a, int b) {
        return swarm[static_cast<std::size_t>(a)].pbest_fitness >
               swarm[static_cast<std::size_t>(b)].pbest_fitness;
    });
    const double eps2 = position_epsilon * position_epsilon;
    std::vector<Candidate> kept;
    for (int idx : order) {
        const Particle& particle = swarm[static_cast<std::size_t>(idx)];
        bool crowded = false;
        for (const Candidate& candidate : kept) {
            if (squared_distance(particle.pbest_position, candidate.position) <= eps2) {
                crowded = true;
                break;
            }
        }
        if (!crowded) {
            kept.push_back(Candidate{particle.pbest_position, -particle.pbest_fitness});
        }
    }
    return kept;
}

int count_found_optima(const std::vector<Candidate>& candidates,
                       const OptimaCatalog& catalog, const MatchCriteria& criteria) {
    criteria.validate();
    if (catalog.entries.empty()) {
        throw std::invalid_argument("count_found_optima requires a non-empty catalog");
    }
    std::vector<bool> found(catalog.entries.size(), false);
    for (const Candidate& candidate : candidates) {
        std::size_t nearest = 0;
        double nearest_d2 = squared_distance(candidate.position,
                                             catalog.entries.front().position);
        for (std::size_t e = 1; e < catalog.entries.size(); ++e) {
            const double d2 =
                squared_distance(candidate.position, catalog.entries[e].position);
            if (d2 < nearest_d2) {
                nearest_d2 = d2;
                nearest = e;
            }
        }
        const OptimumEntry& entry = catalog.entries[nearest];
        const bool position_ok =
            nearest_d2 <= criteria.position_epsilon * criteria.position_epsilon;
        const bool value_ok =
            std::abs(candidate.value - entry.value) <= criteria.fitness_epsilon;
        if (position_ok && value_ok) {
            found[nearest] = true;
        }
    }
    return static_cast<int>(std::count(found.begin(), found.end(), true));
}

ExperimentResult aggregate(FunctionId function_id, Algorithm algorithm, int population,
                           int iterations, const std::vector<int>& found_per_run,
                           int denominator) {
    if (found_per_run.empty()) {
        throw std::invalid_argument("aggregate requires at least one run");
    }
    if (denominator <= 0) {
        throw std::invalid_argument("aggregate requires a positive denominator");
    }
    ExperimentResult result;
    result.function_id = function_id;
    result.algorithm = algorithm;
    result.population = population;
    result.iterations = iterations;
    result.runs = static_cast<int>(found_per_run.size());
    result.found_per_run = found_per_run;
    const double total = std::accumulate(found_per_run.begin(), found_per_run.end(), 0.0);
    result.anof = total / static_cast<double>(result.runs);
    result.denominator = denominator;
    result.peak_ratio = result.anof / static_cast<double>(denominator);
    return result;
}

} // namespace mmopt
