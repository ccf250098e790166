#pragma once

#include <cstdint>
#include <random>

namespace mmopt {

/// Seeded uniform stream used by every optimizer run.
///
/// Each run owns exactly one stream, consumed in a documented order
/// (initialization draws first, then per-iteration per-particle draws;
/// see README "Reproducibility"). The mapping from engine output to a
/// double is the 53-bit method, so identical seeds give identical
/// sequences on any platform.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi], both inclusive.
    int uniform_int(int lo, int hi) {
        const int span = hi - lo + 1;
        const int offset = static_cast<int>(uniform() * span);
        return lo + (offset < span ? offset : span - 1);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace mmopt
