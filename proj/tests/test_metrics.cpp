#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mmopt/metrics.hpp"

using namespace mmopt;

namespace {

/// Swarm whose personal bests sit at the given points with the given
/// objective values (internal fitness is the negated objective).
Swarm pbest_swarm(const std::vector<Vec>& points, const std::vector<double>& values) {
    Swarm swarm(points.size());
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        swarm[i].position = points[i];
        swarm[i].velocity = Vec(points[i].size(), 0.0);
        swarm[i].fitness = -values[i];
        swarm[i].pbest_position = points[i];
        swarm[i].pbest_fitness = -values[i];
    }
    return swarm;
}

OptimaCatalog grid_catalog(int side, double spacing) {
    OptimaCatalog catalog;
    catalog.function_id = FunctionId::F3Rastrigin;
    catalog.grid_step = spacing;
    catalog.position_tolerance = spacing / 10.0;
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
            OptimumEntry entry;
            entry.position = {spacing * c, spacing * r};
            entry.value = static_cast<double>(r * side + c);
            entry.kind = (r == 0 && c == 0) ? OptimumKind::Global : OptimumKind::Local;
            catalog.entries.push_back(entry);
        }
    }
    return catalog;
}

double euclid(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(s);
}

} // namespace

TEST_CASE("match criteria validation and defaults") {
    MatchCriteria bad;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.position_epsilon = 0.1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.fitness_epsilon = 1e-6;
    CHECK_NOTHROW(bad.validate());

    const Bounds camel{{-1.9, -1.1}, {1.9, 1.1}};
    const MatchCriteria criteria = default_criteria(camel);
    CHECK(criteria.position_epsilon == doctest::Approx(0.19)); // 5% of width 3.8
    CHECK(criteria.fitness_epsilon == 1e-6);
    const Bounds square{{0.0, 0.0}, {8.0, 2.0}};
    CHECK(default_criteria(square).position_epsilon == doctest::Approx(0.4));
}

TEST_CASE("extract_candidates collapses a converged swarm to one representative") {
    Swarm swarm = pbest_swarm({{1, 1}, {1.01, 1.0}, {0.99, 1.02}},
                              {5.0, 4.0, 6.0});
    const auto candidates = extract_candidates(swarm, 0.5);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates[0].position == Vec{1.01, 1.0}); // lowest objective wins
    CHECK(candidates[0].value == doctest::Approx(4.0));
}

TEST_CASE("extract_candidates keeps one representative per separated cluster") {
    Swarm swarm = pbest_swarm(
        {{0, 0}, {0.01, 0}, {5, 5}, {5.02, 5.01}, {0.02, 0.01}, {4.98, 5.0}},
        {1.0, 0.5, 2.0, 0.1, 3.0, 2.5});
    const auto candidates = extract_candidates(swarm, 0.5);
    REQUIRE(candidates.size() == 2);
    // Ordered fittest first: the (5,5) cluster holds the best value 0.1.
    CHECK(candidates[0].value == doctest::Approx(0.1));
    CHECK(candidates[1].value == doctest::Approx(0.5));
    CHECK(euclid(candidates[0].position, {5.02, 5.01}) == 0.0);
    CHECK(euclid(candidates[1].position, {0.01, 0.0}) == 0.0);
}

TEST_CASE("extract_candidates resolves fitness ties toward the lower index") {
    Swarm swarm = pbest_swarm({{0, 0}, {0.1, 0}}, {2.0, 2.0});
    const auto candidates = extract_candidates(swarm, 1.0);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates[0].position == Vec{0.0, 0.0});
}

TEST_CASE("extract_candidates treats the crowding radius as inclusive") {
    // Strictly-farther rule: distance == epsilon is still crowded out.
    Swarm at_eps = pbest_swarm({{0, 0}, {1.0, 0}}, {1.0, 2.0});
    CHECK(extract_candidates(at_eps, 1.0).size() == 1);
    Swarm past_eps = pbest_swarm({{0, 0}, {1.0 + 1e-9, 0}}, {1.0, 2.0});
    CHECK(extract_candidates(past_eps, 1.0).size() == 2);
}

TEST_CASE("extract_candidates: empty swarm and validation") {
    CHECK(extract_candidates(Swarm{}, 0.5).empty());
    Swarm swarm = pbest_swarm({{0, 0}}, {1.0});
    CHECK_THROWS_AS(extract_candidates(swarm, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(extract_candidates(swarm, -1.0), std::invalid_argument);
}

TEST_CASE("extract_candidates agrees with a literal greedy oracle") {
    RngStream rng(321);
    for (int trial = 0; trial < 200; ++trial) {
        const int size = rng.uniform_int(1, 25);
        std::vector<Vec> points;
        std::vector<double> values;
        for (int i = 0; i < size; ++i) {
            points.push_back({rng.uniform() * 4.0, rng.uniform() * 4.0});
            values.push_back(std::floor(rng.uniform() * 5.0)); // force ties
        }
        const double eps = 0.2 + rng.uniform() * 1.5;
        Swarm swarm = pbest_swarm(points, values);

        // Oracle: stable order by value ascending, greedy acceptance.
        std::vector<int> order(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) order[static_cast<std::size_t>(i)] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
        });
        std::vector<int> kept;
        for (int idx : order) {
            bool crowded = false;
            for (int k : kept) {
                if (euclid(points[static_cast<std::size_t>(idx)],
                           points[static_cast<std::size_t>(k)]) <= eps) {
                    crowded = true;
                    break;
                }
            }
            if (!crowded) kept.push_back(idx);
        }

        const auto candidates = extract_candidates(swarm, eps);
        REQUIRE(candidates.size() == kept.size());
        for (std::size_t k = 0; k < kept.size(); ++k) {
            CHECK(candidates[k].position == points[static_cast<std::size_t>(kept[k])]);
            CHECK(candidates[k].value == values[static_cast<std::size_t>(kept[k])]);
        }
    }
}

TEST_CASE("count_found_optima: exact hits count every entry once") {
    const OptimaCatalog catalog = grid_catalog(3, 1.0);
    std::vector<Candidate> candidates;
    for (const auto& entry : catalog.entries) {
        candidates.push_back({entry.position, entry.value});
    }
    const MatchCriteria criteria{0.05, 1e-6};
    CHECK(count_found_optima(candidates, catalog, criteria) == 9);
    CHECK(count_found_optima({}, catalog, criteria) == 0);
}

TEST_CASE("count_found_optima tolerates small jitter and rejects large jitter") {
    const OptimaCatalog catalog = grid_catalog(4, 1.0);
    const MatchCriteria criteria{0.05, 1e-6};
    RngStream rng(9);
    std::vector<Candidate> near_hits;
    std::vector<Candidate> far_misses;
    for (const auto& entry : catalog.entries) {
        const double angle = rng.uniform() * 6.283185307179586;
        const Vec small{entry.position[0] + 0.5 * criteria.position_epsilon * std::cos(angle),
                        entry.position[1] + 0.5 * criteria.position_epsilon * std::sin(angle)};
        near_hits.push_back({small, entry.value});
        const Vec big{entry.position[0] + 3.0 * criteria.position_epsilon * std::cos(angle),
                      entry.position[1] + 3.0 * criteria.position_epsilon * std::sin(angle)};
        far_misses.push_back({big, entry.value});
    }
    CHECK(count_found_optima(near_hits, catalog, criteria) == 16);
    CHECK(count_found_optima(far_misses, catalog, criteria) == 0);
}

TEST_CASE("count_found_optima requires the objective value to match too") {
    const OptimaCatalog catalog = grid_catalog(2, 1.0);
    const MatchCriteria criteria{0.05, 1e-6};
    std::vector<Candidate> off_value;
    for (const auto& entry : catalog.entries) {
        off_value.push_back({entry.position, entry.value + 2e-6});
    }
    CHECK(count_found_optima(off_value, catalog, criteria) == 0);
    std::vector<Candidate> within;
    for (const auto& entry : catalog.entries) {
        within.push_back({entry.position, entry.value + 0.5e-6});
    }
    CHECK(count_found_optima(within, catalog, criteria) == 4);
}

TEST_CASE("count_found_optima counts a multiply-hit entry once") {
    const OptimaCatalog catalog = grid_catalog(2, 1.0);
    const MatchCriteria criteria{0.1, 1e-6};
    const OptimumEntry& e = catalog.entries.front();
    std::vector<Candidate> candidates{
        {{e.position[0] + 0.01, e.position[1]}, e.value},
        {{e.position[0] - 0.01, e.position[1]}, e.value},
        {{e.position[0], e.position[1] + 0.02}, e.value},
    };
    CHECK(count_found_optima(candidates, catalog, criteria) == 1);
}

TEST_CASE("count_found_optima matches against the nearest entry only") {
    // Candidate within the tolerance of both entries but nearer to entry 0,
    // carrying entry 1's value: the nearest-entry value check fails.
    OptimaCatalog catalog;
    catalog.entries.push_back({{0.0, 0.0}, 1.0, OptimumKind::Local});
    catalog.entries.push_back({{1.0, 0.0}, 2.0, OptimumKind::Local});
    const MatchCriteria criteria{0.8, 1e-6};
    CHECK(count_found_optima({{{0.3, 0.0}, 2.0}}, catalog, criteria) == 0);
    CHECK(count_found_optima({{{0.3, 0.0}, 1.0}}, catalog, criteria) == 1);
}

TEST_CASE("count_found_optima widening tolerances never loses matches") {
    RngStream rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        const OptimaCatalog catalog = grid_catalog(3, 1.0);
        std::vector<Candidate> candidates;
        const int m = rng.uniform_int(1, 12);
        for (int i = 0; i < m; ++i) {
            candidates.push_back({{rng.uniform() * 2.4 - 0.2, rng.uniform() * 2.4 - 0.2},
                                  std::floor(rng.uniform() * 9.0) + rng.uniform() * 0.2});
        }
        const MatchCriteria tight{0.05 + rng.uniform() * 0.2, 1e-3 + rng.uniform() * 0.1};
        const MatchCriteria loose{tight.position_epsilon * 2.0,
                                  tight.fitness_epsilon * 2.0};
        const int a = count_found_optima(candidates, catalog, tight);
        const int b = count_found_optima(candidates, catalog, loose);
        CHECK(a <= b);
        CHECK(b <= static_cast<int>(std::min(candidates.size(), catalog.entries.size())));
    }
}

TEST_CASE("count_found_optima rejects an empty catalog") {
    OptimaCatalog empty;
    const MatchCriteria criteria{0.1, 1e-6};
    CHECK_THROWS_AS(count_found_optima({{{0.0, 0.0}, 1.0}}, empty, criteria),
                    std::invalid_argument);
}

TEST_CASE("aggregate computes the average and the peak ratio") {
    const std::vector<int> found{2, 2, 2, 2, 2, 2, 2, 2, 2, 3};
    const ExperimentResult r = aggregate(FunctionId::F1SixHumpCamel, Algorithm::Epso,
                                         30, 60, found, 6);
    CHECK(r.runs == 10);
    CHECK(r.anof == doctest::Approx(2.1));
    CHECK(r.peak_ratio == doctest::Approx(0.35));
    CHECK(r.peak_ratio == r.anof / 6.0);
    CHECK(r.population == 30);
    CHECK(r.iterations == 60);
    CHECK(r.denominator == 6);
    CHECK(r.found_per_run == found);
    CHECK(r.function_id == FunctionId::F1SixHumpCamel);
    CHECK(r.algorithm == Algorithm::Epso);

    const ExperimentResult flat =
        aggregate(FunctionId::F5DeJong5, Algorithm::Lsepso, 400, 30, {7, 7, 7}, 25);
    CHECK(flat.anof == 7.0);
    CHECK(flat.peak_ratio == doctest::Approx(0.28));
}

TEST_CASE("aggregate input validation") {
    CHECK_THROWS_AS(aggregate(FunctionId::F1SixHumpCamel, Algorithm::Pso, 30, 60, {}, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        aggregate(FunctionId::F1SixHumpCamel, Algorithm::Pso, 30, 60, {1}, 0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        aggregate(FunctionId::F1SixHumpCamel, Algorithm::Pso, 30, 60, {1}, -3),
        std::invalid_argument);
}
