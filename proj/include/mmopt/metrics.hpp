#pragma once

#include "mmopt/catalog.hpp"
#include "mmopt/core.hpp"

namespace mmopt {

/// Tolerances used to decide whether a candidate point has located a
/// catalogued optimum: within position_epsilon of it in space and within
/// fitness_epsilon of its objective value.
struct MatchCriteria {
    double position_epsilon = 0.0;
    double fitness_epsilon = 0.0;

    void validate() const;
};

/// Position tolerance 5% of the widest box side (a niche radius; it
/// separates every entry of all shipped catalogs). Fitness tolerance 1e-6
/// absolute: an accuracy level in the CEC-niching style, tight enough
/// that an optimum only counts when its value has actually been located.
MatchCriteria default_criteria(const Bounds& bounds);

/// A niche representative in objective orientation (value = objective, so
/// lower is better).
struct Candidate {
    Vec position;
    double value = 0.0;
};

/// Greedy niche reduction over final personal bests: walk them from
/// fittest to least fit (ties toward the lower index) and keep each one
/// strictly farther than position_epsilon from everything already kept.
std::vector<Candidate> extract_candidates(const Swarm& swarm, double position_epsilon);

/// Number of distinct catalogue entries located. Each candidate maps to
/// its nearest entry (ties toward the lower entry index) and counts only
/// when both tolerances hold; several candidates on one entry count once.
int count_found_optima(const std::vector<Candidate>& candidates,
                       const OptimaCatalog& catalog, const MatchCriteria& criteria);

/// Aggregated outcome of a batch of independent runs.
struct ExperimentResult {
    FunctionId function_id = FunctionId::F1SixHumpCamel;
    Algorithm algorithm = Algorithm::Lsepso;
    int population = 0;
    int iterations = 0;
    int runs = 0;
    std::vector<int> found_per_run;
    double anof = 0.0;       ///< average number of found optima
    double peak_ratio = 0.0; ///< anof / denominator
    int denominator = 0;
};

ExperimentResult aggregate(FunctionId function_id, Algorithm algorithm, int population,
                           int iterations, const std::vector<int>& found_per_run,
                           int denominator);

} // namespace mmopt
