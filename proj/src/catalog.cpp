#include "mmopt/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace mmopt {

namespace {

constexpr int kCatalogFormatVersion = 1;
constexpr double kGlobalValueSlack = 1e-6;

double dist2(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        s += diff * diff;
    }
    return s;
}

// Bound-constrained compass descent with halving step, started at the
// seeding grid's resolution.
Vec compass_descent(const BenchmarkFunction& fn, Vec x, double step,
                    double stop_step) {
    double best = fn.evaluate(x);
    long budget = 200000;
    while (step > stop_step && budget > 0) {
        bool improved = false;
        for (std::size_t d = 0; d < x.size(); ++d) {
            for (const double sign : {1.0, -1.0}) {
                Vec trial = x;
                trial[d] = std::clamp(trial[d] + sign * step,
                                      fn.bounds.lower[d], fn.bounds.upper[d]);
                const double v = fn.evaluate(trial);
                --budget;
                if (v < best) {
                    best = v;
                    x = std::move(trial);
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return x;
}

// A converged point must not be beaten by any of 8 probe points on the
// circle of radius tol/2 (probes clamped into the box).
bool passes_probe_test(const BenchmarkFunction& fn, const Vec& x, double value,
                       double tol) {
    const double r = 0.5 * tol;
    for (int k = 0; k < 8; ++k) {
        const double angle = k * std::numbers::pi / 4.0;
        Vec probe = x;
        probe[0] += r * std::cos(angle);
        probe[1] += r * std::sin(angle);
        fn.bounds.clamp(probe);
        if (fn.evaluate(probe) < value - 1e-12) return false;
    }
    return true;
}

} // namespace

int OptimaCatalog::global_count() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
        [](const OptimumEntry& e) { return e.kind == OptimumKind::Global; }));
}

double OptimaCatalog::min_value() const {
    double v = entries.front().value;
    for (const auto& e : entries) v = std::min(v, e.value);
    return v;
}

double OptimaCatalog::max_value() const {
    double v = entries.front().value;
    for (const auto& e : entries) v = std::max(v, e.value);
    return v;
}

OptimaCatalog build_catalog(FunctionId id, const CatalogParams& params) {
    const BenchmarkFunction& fn = benchmark(id);
    const double width = fn.bounds.max_width();
    const double grid_step =
        params.grid_step > 0.0 ? params.grid_step : width / 500.0;
    const double tol =
        params.position_tolerance > 0.0 ? params.position_tolerance : width / 200.0;

    // Grid values over the box.
    const std::size_t n0 =
        static_cast<std::size_t>(std::llround(fn.bounds.width(0) / grid_step)) + 1;
    const std::size_t n1 =
        static_cast<std::size_t>(std::llround(fn.bounds.width(1) / grid_step)) + 1;
    std::vector<double> values(n0 * n1);
    auto grid_point = [&](std::size_t i, std::size_t j) {
        return Vec{
            fn.bounds.lower[0] + fn.bounds.width(0) * static_cast<double>(i) / (n0 - 1),
            fn.bounds.lower[1] + fn.bounds.width(1) * static_cast<double>(j) / (n1 - 1)};
    };
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            values[i * n1 + j] = fn.evaluate(grid_point(i, j));

    // Seeds: grid points not above any of their existing 8 neighbors.
    std::vector<Vec> seeds;
    for (std::size_t i = 0; i < n0; ++i) {
        for (std::size_t j = 0; j < n1; ++j) {
            const double v = values[i * n1 + j];
            bool is_min = true;
            for (int di = -1; di <= 1 && is_min; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    const std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(i) + di;
                    const std::ptrdiff_t nj = static_cast<std::ptrdiff_t>(j) + dj;
                    if (ni < 0 || nj < 0 || ni >= static_cast<std::ptrdiff_t>(n0) ||
                        nj >= static_cast<std::ptrdiff_t>(n1))
                        continue;
                    if (values[static_cast<std::size_t>(ni) * n1 +
                               static_cast<std::size_t>(nj)] < v) {
                        is_min = false;
                        break;
                    }
                }
            }
            if (is_min) seeds.push_back(grid_point(i, j));
        }
    }

    // Descend, probe-filter, then dedup best-first at radius 2*tol so the
    // separation invariant holds by construction.
    std::vector<OptimumEntry> converged;
    for (const auto& seed : seeds) {
        Vec x = compass_descent(fn, seed, grid_step, width * 1e-9);
        const double v = fn.evaluate(x);
        if (passes_probe_test(fn, x, v, tol))
            converged.push_back({std::move(x), v, OptimumKind::Local});
    }
    std::sort(converged.begin(), converged.end(),
              [](const OptimumEntry& a, const OptimumEntry& b) {
                  return a.value < b.value;
              });

    OptimaCatalog catalog{id, grid_step, tol, {}};
    const double min_sep2 = 4.0 * tol * tol;
    for (auto& c : converged) {
        bool distinct = true;
        for (const auto& e : catalog.entries) {
            if (dist2(c.position, e.position) <= min_sep2) {
                distinct = false;
                break;
            }
        }
        if (distinct) catalog.entries.push_back(std::move(c));
    }

    const double global_value = catalog.min_value();
    for (auto& e : catalog.entries)
        e.kind = e.value <= global_value + kGlobalValueSlack ? OptimumKind::Global
                                                             : OptimumKind::Local;
    return catalog;
}

void save_catalog(const OptimaCatalog& catalog, const std::filesystem::path& path) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : catalog.entries) {
        entries.push_back({
            {"position", e.position},
            {"value", e.value},
            {"kind", e.kind == OptimumKind::Global ? "global" : "local"},
        });
    }
    const nlohmann::json doc = {
        {"format_version", kCatalogFormatVersion},
        {"function", function_name(catalog.function_id)},
        {"grid_step", catalog.grid_step},
        {"position_tolerance", catalog.position_tolerance},
        {"entries", entries},
    };
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << doc.dump(2) << '\n';
}

OptimaCatalog load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    nlohmann::json doc;
    in >> doc;
    if (doc.at("format_version").get<int>() != kCatalogFormatVersion)
        throw std::runtime_error(path.string() + ": unsupported catalog format version");

    OptimaCatalog catalog;
    catalog.function_id = parse_function(doc.at("function").get<std::string>());
    catalog.grid_step = doc.at("grid_step").get<double>();
    catalog.position_tolerance = doc.at("position_tolerance").get<double>();
    for (const auto& e : doc.at("entries")) {
        OptimumEntry entry;
        entry.position = e.at("position").get<Vec>();
        entry.value = e.at("value").get<double>();
        entry.kind = e.at("kind").get<std::string>() == "global" ? OptimumKind::Global
                                                                 : OptimumKind::Local;
        catalog.entries.push_back(std::move(entry));
    }
    if (catalog.entries.empty())
        throw std::runtime_error(path.string() + ": catalog has no entries");
    return catalog;
}

} // namespace mmopt
