#include "mmopt/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
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

int best_pbest_index(const Swarm& swarm) {
    int best = 0;
    for (int j = 1; j < static_cast<int>(swarm.size()); ++j) {
        if (swarm[static_cast<std::size_t>(j)].pbest_fitness >
            swarm[static_cast<std::size_t>(best)].pbest_fitness) {
            best = j;
        }
    }
    return best;
}

/// Phase B + C shared by every algorithm: move all particles against the
/// frozen targets, then evaluate and refresh personal bests.
void move_and_evaluate(Swarm& swarm, const std::vector<const Vec*>& targets,
                       const SwarmConfig& config, const Bounds& bounds,
                       Evaluator& evaluator, RngStream& rng) {
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        Particle& particle = swarm[i];
        particle.velocity = update_velocity(particle, *targets[i], config, bounds, rng);
        step_position(particle, bounds);
    }
    for (Particle& particle : swarm) {
        particle.fitness = evaluator.fitness(particle.position);
        update_personal_best(particle);
    }
}

/// Resolve each particle's attractor from the frozen state. Degenerate
/// selections (fully collapsed swarm) fall back to the particle's own
/// personal best; a single-particle swarm self-attracts the same way.
std::vector<const Vec*> resolve_targets(const Swarm& swarm,
                                        AttractorChoice (*select)(int, const Swarm&, double),
                                        double alpha) {
    std::vector<const Vec*> targets(swarm.size());
    if (swarm.size() < 2) {
        for (std::size_t i = 0; i < swarm.size(); ++i) {
            targets[i] = &swarm[i].pbest_position;
        }
        return targets;
    }
    for (int i = 0; i < static_cast<int>(swarm.size()); ++i) {
        const AttractorChoice choice = select(i, swarm, alpha);
        targets[static_cast<std::size_t>(i)] =
            &swarm[static_cast<std::size_t>(choice.target_index)].pbest_position;
    }
    return targets;
}

} // namespace

std::vector<double> charge_view(const Swarm& swarm) {
    if (swarm.empty()) {
        throw std::invalid_argument("charge_view requires a non-empty swarm");
    }
    double best = swarm.front().pbest_fitness;
    double worst = best;
    for (const Particle& particle : swarm) {
        best = std::max(best, particle.pbest_fitness);
        worst = std::min(worst, particle.pbest_fitness);
    }
    // Keep every charge strictly positive, including the worst particle's.
    const double delta = std::max(1e-9, 1e-6 * (best - worst));
    std::vector<double> charges(swarm.size());
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        charges[i] = swarm[i].pbest_fitness - worst + delta;
    }
    return charges;
}

double coulomb_force(double charge_i, double charge_j, double distance, double alpha) {
    if (distance <= 0.0) {
        throw std::invalid_argument("coulomb_force requires distance > 0");
    }
    return alpha * charge_i * charge_j / (distance * distance);
}

double compute_alpha(const Bounds& bounds, double best_fitness, double worst_fitness) {
    if (best_fitness <= worst_fitness) {
        return 1.0;
    }
    return bounds.diagonal() / (best_fitness - worst_fitness);
}

double fer_value(double pbest_fitness_j, double current_fitness_i,
                 double distance, double alpha) {
    if (distance <= 0.0) {
        throw std::invalid_argument("fer_value requires distance > 0");
    }
    return alpha * (pbest_fitness_j - current_fitness_i) / distance;
}

AttractorChoice select_electrostatic_target(int i, const Swarm& swarm, double alpha) {
    const int size = static_cast<int>(swarm.size());
    if (size < 2) {
        throw std::invalid_argument("electrostatic selection requires at least 2 particles");
    }
    if (i < 0 || i >= size) {
        throw std::invalid_argument("particle index out of range");
    }
    const std::vector<double> charges = charge_view(swarm);
    const Vec& center = swarm[static_cast<std::size_t>(i)].pbest_position;

    AttractorChoice choice;
    choice.particle_index = i;
    choice.target_index = i;
    choice.score = -std::numeric_limits<double>::infinity();
    choice.degenerate = true;
    for (int j = 0; j < size; ++j) {
        if (j == i) {
            continue;
        }
        const double d2 =
            squared_distance(center, swarm[static_cast<std::size_t>(j)].pbest_position);
        if (d2 == 0.0) {
            continue; // coincident personal bests carry no usable force
        }
        const double force = coulomb_force(charges[static_cast<std::size_t>(i)],
                                           charges[static_cast<std::size_t>(j)],
                                           std::sqrt(d2), alpha);
        if (force > choice.score) {
            choice.score = force;
            choice.target_index = j;
            choice.degenerate = false;
        }
    }
    return choice;
}

AttractorChoice select_fer_target(int i, const Swarm& swarm, double alpha) {
    const int size = static_cast<int>(swarm.size());
    if (size < 2) {
        throw std::invalid_argument("FER selection requires at least 2 particles");
    }
    if (i < 0 || i >= size) {
        throw std::invalid_argument("particle index out of range");
    }
    const Particle& self = swarm[static_cast<std::size_t>(i)];

    AttractorChoice choice;
    choice.particle_index = i;
    choice.target_index = i;
    choice.score = -std::numeric_limits<double>::infinity();
    choice.degenerate = true;
    for (int j = 0; j < size; ++j) {
        if (j == i) {
            continue;
        }
        const Particle& other = swarm[static_cast<std::size_t>(j)];
        const double d2 = squared_distance(self.position, other.pbest_position);
        if (d2 == 0.0) {
            continue;
        }
        const double value =
            fer_value(other.pbest_fitness, self.fitness, std::sqrt(d2), alpha);
        if (value > choice.score) {
            choice.score = value;
            choice.target_index = j;
            choice.degenerate = false;
        }
    }
    return choice;
}

void pso_step(Swarm& swarm, const SwarmConfig& config, const Bounds& bounds,
              Evaluator& evaluator, RngStream& rng) {
    if (swarm.empty()) {
        throw std::invalid_argument("step requires a non-empty swarm");
    }
    const int gbest = best_pbest_index(swarm);
    const Vec gbest_position = swarm[static_cast<std::size_t>(gbest)].pbest_position;
    std::vector<const Vec*> targets(swarm.size(), &gbest_position);
    move_and_evaluate(swarm, targets, config, bounds, evaluator, rng);
}

void epso_step(Swarm& swarm, const SwarmConfig& config, const Bounds& bounds,
               Evaluator& evaluator, RngStream& rng) {
    if (swarm.empty()) {
        throw std::invalid_argument("step requires a non-empty swarm");
    }
    double best = swarm.front().pbest_fitness;
    double worst = best;
    for (const Particle& particle : swarm) {
        best = std::max(best, particle.pbest_fitness);
        worst = std::min(worst, particle.pbest_fitness);
    }
    const double alpha = compute_alpha(bounds, best, worst);
    // Targets hold pointers into the swarm; positions mutate only after
    // selection completes, and personal bests only after all moves.
    const std::vector<const Vec*> targets =
        resolve_targets(swarm, &select_electrostatic_target, alpha);
    move_and_evaluate(swarm, targets, config, bounds, evaluator, rng);
}

void ferpso_step(Swarm& swarm, const SwarmConfig& config, const Bounds& bounds,
                 Evaluator& evaluator, RngStream& rng) {
    if (swarm.empty()) {
        throw std::invalid_argument("step requires a non-empty swarm");
    }
    double best = swarm.front().pbest_fitness;
    double worst = best;
    for (const Particle& particle : swarm) {
        best = std::max(best, particle.pbest_fitness);
        worst = std::min(worst, particle.pbest_fitness);
    }
    const double alpha = compute_alpha(bounds, best, worst);
    const std::vector<const Vec*> targets =
        resolve_targets(swarm, &select_fer_target, alpha);
    move_and_evaluate(swarm, targets, config, bounds, evaluator, rng);
}

std::uint64_t lsepso_step(Swarm& swarm, const SwarmConfig& config,
                          const LocalSearchConfig& ls, const Bounds& bounds,
                          Evaluator& evaluator, RngStream& rng) {
    if (swarm.empty()) {
        throw std::invalid_argument("step requires a non-empty swarm");
    }
    std::uint64_t ls_evals = 0;
    if (ls.enabled && swarm.size() >= 2) {
        // Sequential pass: particle i's search sees improvements already
        // committed by particles 0..i-1 this iteration.
        for (int i = 0; i < static_cast<int>(swarm.size()); ++i) {
            ls_evals += local_search_improve(i, swarm, ls, bounds, evaluator, rng);
        }
    }
    const std::vector<const Vec*> targets =
        resolve_targets(swarm, &select_electrostatic_target, 1.0);
    move_and_evaluate(swarm, targets, config, bounds, evaluator, rng);
    return ls_evals;
}

std::uint64_t step(Swarm& swarm, const SwarmConfig& config,
                   const LocalSearchConfig& ls, const Bounds& bounds,
                   Evaluator& evaluator, RngStream& rng) {
    switch (config.algorithm) {
        case Algorithm::Pso:
            pso_step(swarm, config, bounds, evaluator, rng);
            return 0;
        case Algorithm::Epso:
            epso_step(swarm, config, bounds, evaluator, rng);
            return 0;
        case Algorithm::Ferpso:
            ferpso_step(swarm, config, bounds, evaluator, rng);
            return 0;
        case Algorithm::Lsepso:
            return lsepso_step(swarm, config, ls, bounds, evaluator, rng);
    }
    throw std::invalid_argument("unknown algorithm");
}

} // namespace mmopt
