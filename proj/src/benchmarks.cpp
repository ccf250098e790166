#include "mmopt/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmopt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double six_hump_camel(double x, double y) {
    return (4.0 - 2.1 * x * x + x * x * x * x / 3.0) * x * x + x * y
         + (-4.0 + 4.0 * y * y) * y * y;
}

double ackley(double x, double y) {
    return -20.0 * std::exp(-0.2 * std::sqrt(0.5 * (x * x + y * y)))
         - std::exp(0.5 * (std::cos(kTwoPi * x) + std::cos(kTwoPi * y)))
         + 20.0 + std::numbers::e;
}

double rastrigin(double x, double y) {
    return 20.0 + x * x - 10.0 * std::cos(kTwoPi * x)
                + y * y - 10.0 * std::cos(kTwoPi * y);
}

double shubert(double x, double y) {
    double sx = 0.0;
    double sy = 0.0;
    for (int i = 1; i <= 5; ++i) {
        sx += i * std::cos((i + 1) * x + i);
        sy += i * std::cos((i + 1) * y + i);
    }
    return sx * sy;
}

// Foxhole grid: a1 cycles {-32,-16,0,16,32}, a2 steps through the same
// values every five holes.
double dejong5(double x, double y) {
    static constexpr double kA[5] = {-32.0, -16.0, 0.0, 16.0, 32.0};
    double s = 0.002;
    for (int j = 0; j < 25; ++j) {
        const double dx = x - kA[j % 5];
        const double dy = y - kA[j / 5];
        const double dx3 = dx * dx * dx;
        const double dy3 = dy * dy * dy;
        s += 1.0 / ((j + 1) + dx3 * dx3 + dy3 * dy3);
    }
    return 1.0 / s;
}

const std::vector<BenchmarkFunction> kBenchmarks = {
    {FunctionId::F1SixHumpCamel, "f1", "six-hump camel back",
     {{-1.9, -1.1}, {1.9, 1.1}}},
    {FunctionId::F2Ackley, "f2", "Ackley", {{-5.0, -5.0}, {5.0, 5.0}}},
    {FunctionId::F3Rastrigin, "f3", "Rastrigin", {{-5.12, -5.12}, {5.12, 5.12}}},
    {FunctionId::F4Shubert, "f4", "Shubert", {{-5.12, -5.12}, {5.12, 5.12}}},
    {FunctionId::F5DeJong5, "f5", "De Jong 5",
     {{-65.536, -65.536}, {65.536, 65.536}}},
};

} // namespace

double BenchmarkFunction::evaluate(const Vec& x) const {
    if (x.size() != bounds.dimension())
        throw std::invalid_argument(name + ": expected dimension " +
                                    std::to_string(bounds.dimension()));
    switch (id) {
        case FunctionId::F1SixHumpCamel: return six_hump_camel(x[0], x[1]);
        case FunctionId::F2Ackley: return ackley(x[0], x[1]);
        case FunctionId::F3Rastrigin: return rastrigin(x[0], x[1]);
        case FunctionId::F4Shubert: return shubert(x[0], x[1]);
        case FunctionId::F5DeJong5: return dejong5(x[0], x[1]);
    }
    throw std::logic_error("unreachable");
}

const BenchmarkFunction& benchmark(FunctionId id) {
    return kBenchmarks[static_cast<std::size_t>(id)];
}

const std::vector<FunctionId>& all_functions() {
    static const std::vector<FunctionId> ids = {
        FunctionId::F1SixHumpCamel, FunctionId::F2Ackley, FunctionId::F3Rastrigin,
        FunctionId::F4Shubert, FunctionId::F5DeJong5};
    return ids;
}

double evaluate(FunctionId id, const Vec& x) {
    return benchmark(id).evaluate(x);
}

const char* function_name(FunctionId id) {
    return benchmark(id).name.c_str();
}

FunctionId parse_function(const std::string& name) {
    for (const auto& b : kBenchmarks)
        if (b.name == name) return b.id;
    throw std::invalid_argument("unknown function '" + name +
                                "' (valid: f1, f2, f3, f4, f5)");
}

} // namespace mmopt
