#include "mmopt/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmopt {

double Bounds::max_width() const {
    double w = 0.0;
    for (std::size_t d = 0; d < dimension(); ++d) w = std::max(w, width(d));
    return w;
}

double Bounds::diagonal() const {
    double s = 0.0;
    for (std::size_t d = 0; d < dimension(); ++d) s += width(d) * width(d);
    return std::sqrt(s);
}

void Bounds::clamp(Vec& x) const {
    for (std::size_t d = 0; d < dimension(); ++d)
        x[d] = std::clamp(x[d], lower[d], upper[d]);
}

Vec Bounds::clamped(Vec x) const {
    clamp(x);
    return x;
}

bool Bounds::contains(const Vec& x) const {
    for (std::size_t d = 0; d < dimension(); ++d)
        if (x[d] < lower[d] || x[d] > upper[d]) return false;
    return true;
}

void Bounds::validate() const {
    if (lower.empty() || lower.size() != upper.size())
        throw std::invalid_argument("bounds: dimension mismatch or empty");
    for (std::size_t d = 0; d < dimension(); ++d)
        if (!(lower[d] < upper[d]))
            throw std::invalid_argument("bounds: lower must be < upper in every dimension");
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Pso: return "pso";
        case Algorithm::Epso: return "epso";
        case Algorithm::Ferpso: return "ferpso";
        case Algorithm::Lsepso: return "lsepso";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "pso") return Algorithm::Pso;
    if (name == "epso") return Algorithm::Epso;
    if (name == "ferpso") return Algorithm::Ferpso;
    if (name == "lsepso") return Algorithm::Lsepso;
    throw std::invalid_argument("unknown algorithm '" + name +
                                "' (valid: pso, epso, ferpso, lsepso)");
}

void SwarmConfig::validate() const {
    if (population < 1) throw std::invalid_argument("config: population must be positive");
    if (iterations < 1) throw std::invalid_argument("config: iterations must be positive");
    if (w < 0.0) throw std::invalid_argument("config: w must be >= 0");
    if (c1 < 0.0) throw std::invalid_argument("config: c1 must be >= 0");
    if (c2 < 0.0) throw std::invalid_argument("config: c2 must be >= 0");
    if (n_neighbors < 1) throw std::invalid_argument("config: n_neighbors must be positive");
    if (!(vmax_fraction > 0.0 && vmax_fraction <= 1.0))
        throw std::invalid_argument("config: vmax_fraction must be in (0, 1]");
    if (algorithm == Algorithm::Lsepso && n_neighbors >= population)
        throw std::invalid_argument("config: n_neighbors must be < population for lsepso");
}

Swarm init_swarm(const SwarmConfig& config, const Bounds& bounds,
                 Evaluator& evaluator, RngStream& rng) {
    config.validate();
    bounds.validate();
    const std::size_t dim = bounds.dimension();

    Swarm swarm(static_cast<std::size_t>(config.population));
    for (auto& p : swarm) {
        p.position.resize(dim);
        for (std::size_t d = 0; d < dim; ++d)
            p.position[d] = bounds.lower[d] + rng.uniform() * bounds.width(d);
        p.velocity.assign(dim, 0.0);
        p.fitness = evaluator.fitness(p.position);
        p.pbest_position = p.position;
        p.pbest_fitness = p.fitness;
    }
    return swarm;
}

Vec update_velocity(const Particle& p, const Vec& attractor_pbest,
                    const SwarmConfig& config, const Bounds& bounds,
                    RngStream& rng) {
    const std::size_t dim = bounds.dimension();
    Vec v(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        const double r1 = rng.uniform();
        const double r2 = rng.uniform();
        v[d] = config.w * p.velocity[d]
             + r1 * config.c1 * (p.pbest_position[d] - p.position[d])
             + r2 * config.c2 * (attractor_pbest[d] - p.position[d]);
        const double vmax = config.vmax_fraction * bounds.width(d);
        v[d] = std::clamp(v[d], -vmax, vmax);
    }
    return v;
}

void step_position(Particle& p, const Bounds& bounds) {
    for (std::size_t d = 0; d < bounds.dimension(); ++d) {
        p.position[d] += p.velocity[d];
        if (p.position[d] < bounds.lower[d]) {
            p.position[d] = bounds.lower[d];
            p.velocity[d] = 0.0;
        } else if (p.position[d] > bounds.upper[d]) {
            p.position[d] = bounds.upper[d];
            p.velocity[d] = 0.0;
        }
    }
}

void update_personal_best(Particle& p) {
    if (p.fitness > p.pbest_fitness) {
        p.pbest_fitness = p.fitness;
        p.pbest_position = p.position;
    }
}

} // namespace mmopt
