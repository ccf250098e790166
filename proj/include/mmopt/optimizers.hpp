#pragma once

#include <cstdint>

#include "mmopt/core.hpp"
#include "mmopt/local_search.hpp"

namespace mmopt {

/// Per-particle attraction target. When the swarm has fully collapsed
/// (every admissible candidate at distance zero) the choice is flagged
/// degenerate with target_index == particle_index, and step functions
/// substitute the particle's own personal best.
struct AttractorChoice {
    int particle_index = 0;
    int target_index = 0;
    double score = 0.0;
    bool degenerate = false;
};

/// Positive charges for the electrostatic score: personal-best fitness
/// shifted by the swarm's worst plus a small delta. Preserves fitness
/// order and keeps the worst particle attractive.
std::vector<double> charge_view(const Swarm& swarm);

/// alpha * qi * qj / distance^2. Rejects distance <= 0.
double coulomb_force(double charge_i, double charge_j, double distance, double alpha);

/// Box diagonal / (best - worst); returns 1 for a degenerate population
/// with best == worst.
double compute_alpha(const Bounds& bounds, double best_fitness, double worst_fitness);

/// alpha * (f(pbest_j) - f(x_i)) / distance. Rejects distance <= 0.
double fer_value(double pbest_fitness_j, double current_fitness_i,
                 double distance, double alpha);

/// Electrostatic argmax over all other particles, distances between
/// personal-best positions; ties go to the lowest index.
AttractorChoice select_electrostatic_target(int i, const Swarm& swarm, double alpha);

/// FER argmax, distances from particle i's current position to candidate
/// personal bests, raw (unshifted) fitness difference in the numerator.
AttractorChoice select_fer_target(int i, const Swarm& swarm, double alpha);

/// One synchronous iteration. All step functions freeze the swarm at
/// iteration start for attractor selection, update every velocity and
/// position, then evaluate and refresh personal bests.
void pso_step(Swarm& swarm, const SwarmConfig& config, const Bounds& bounds,
              Evaluator& evaluator, RngStream& rng);
void epso_step(Swarm& swarm, const SwarmConfig& config, const Bounds& bounds,
               Evaluator& evaluator, RngStream& rng);
void ferpso_step(Swarm& swarm, const SwarmConfig& config, const Bounds& bounds,
                 Evaluator& evaluator, RngStream& rng);

/// Three phases with swarm-wide barriers: local search on every personal
/// best (sequential, later particles see earlier improvements), then
/// electrostatic selection with alpha = 1, then the velocity/position
/// update. Returns the number of objective evaluations spent in the
/// local-search phase.
std::uint64_t lsepso_step(Swarm& swarm, const SwarmConfig& config,
                          const LocalSearchConfig& ls, const Bounds& bounds,
                          Evaluator& evaluator, RngStream& rng);

/// Dispatch on config.algorithm; returns local-search evaluations (zero
/// for the non-LSEPSO algorithms).
std::uint64_t step(Swarm& swarm, const SwarmConfig& config,
                   const LocalSearchConfig& ls, const Bounds& bounds,
                   Evaluator& evaluator, RngStream& rng);

} // namespace mmopt
