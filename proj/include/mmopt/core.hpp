#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mmopt/rng.hpp"

namespace mmopt {

using Vec = std::vector<double>;

/// Axis-aligned search box. lower[d] < upper[d] for every dimension.
struct Bounds {
    Vec lower;
    Vec upper;

    std::size_t dimension() const { return lower.size(); }
    double width(std::size_t d) const { return upper[d] - lower[d]; }
    double max_width() const;
    /// Euclidean length of the box diagonal.
    double diagonal() const;
    void clamp(Vec& x) const;
    Vec clamped(Vec x) const;
    bool contains(const Vec& x) const;
    /// Throws std::invalid_argument on empty or inverted boxes.
    void validate() const;
};

enum class Algorithm { Pso, Epso, Ferpso, Lsepso };

const char* algorithm_name(Algorithm a);
/// Parses "pso" | "epso" | "ferpso" | "lsepso"; throws with a listing of
/// valid names otherwise.
Algorithm parse_algorithm(const std::string& name);

/// All hyperparameters of a swarm run. Defaults are the standard
/// constriction-equivalent PSO constants; everything is overridable.
struct SwarmConfig {
    int population = 30;
    int iterations = 60;
    double w = 0.7298;            // inertia
    double c1 = 1.49618;          // cognitive coefficient
    double c2 = 1.49618;          // social coefficient
    int n_neighbors = 3;          // local-search neighbor count (LSEPSO)
    double vmax_fraction = 0.5;   // vmax[d] = vmax_fraction * box width
    std::uint64_t seed = 1;
    Algorithm algorithm = Algorithm::Lsepso;

    /// Throws std::invalid_argument when any invariant is violated.
    /// n_neighbors < population is required only for LSEPSO; the other
    /// algorithms never consult n_neighbors, and a one-particle swarm
    /// must remain runnable for them.
    void validate() const;
};

/// One swarm member. fitness is the internal maximization orientation:
/// the engine maximizes -objective, so every selection formula can treat
/// larger values as more attractive.
struct Particle {
    Vec position;
    Vec velocity;
    double fitness = 0.0;
    Vec pbest_position;
    double pbest_fitness = 0.0;
};

using Swarm = std::vector<Particle>;

using ObjectiveFn = std::function<double(const Vec&)>;

/// Wraps a minimization objective as internal maximization fitness and
/// counts every call, which is how the harness audits evaluation budgets.
class Evaluator {
public:
    explicit Evaluator(ObjectiveFn objective) : objective_(std::move(objective)) {}

    double fitness(const Vec& x) {
        ++count_;
        return -objective_(x);
    }

    std::uint64_t evaluations() const { return count_; }

private:
    ObjectiveFn objective_;
    std::uint64_t count_ = 0;
};

/// Uniform random positions (one draw per particle per dimension, in that
/// order), zero velocities, pbest = the evaluated initial point.
Swarm init_swarm(const SwarmConfig& config, const Bounds& bounds,
                 Evaluator& evaluator, RngStream& rng);

/// v' = w*v + R1*c1*(pbest - x) + R2*c2*(attractor - x), with fresh R1, R2
/// per dimension (R1 drawn first), then clamped componentwise to
/// +-vmax_fraction * box width.
Vec update_velocity(const Particle& p, const Vec& attractor_pbest,
                    const SwarmConfig& config, const Bounds& bounds,
                    RngStream& rng);

/// x' = x + v clamped to bounds; a clamped dimension has its velocity
/// component zeroed.
void step_position(Particle& p, const Bounds& bounds);

/// Replaces the personal best iff the current fitness is strictly better.
void update_personal_best(Particle& p);

} // namespace mmopt
