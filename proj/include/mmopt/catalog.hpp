#pragma once

#include <filesystem>
#include <vector>

#include "mmopt/benchmarks.hpp"

namespace mmopt {

enum class OptimumKind { Global, Local };

struct OptimumEntry {
    Vec position;
    double value = 0.0;   // objective (minimization) orientation
    OptimumKind kind = OptimumKind::Local;
};

/// Reference list of a benchmark's minimizers, built by grid seeding plus
/// bound-constrained compass descent. Entries are pairwise separated by
/// more than 2x position_tolerance and each passes an 8-point probe test
/// at radius position_tolerance / 2.
struct OptimaCatalog {
    FunctionId function_id = FunctionId::F1SixHumpCamel;
    double grid_step = 0.0;
    double position_tolerance = 0.0;
    std::vector<OptimumEntry> entries;

    int global_count() const;
    double min_value() const;
    double max_value() const;
};

struct CatalogParams {
    double grid_step = 0.0;            // 0 = box max width / 500
    double position_tolerance = 0.0;   // 0 = box max width / 200
};

OptimaCatalog build_catalog(FunctionId id, const CatalogParams& params = {});

/// Versioned JSON round-trip for disk caching.
void save_catalog(const OptimaCatalog& catalog, const std::filesystem::path& path);
OptimaCatalog load_catalog(const std::filesystem::path& path);

} // namespace mmopt
