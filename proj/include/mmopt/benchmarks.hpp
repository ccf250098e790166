#pragma once

#include <string>
#include <vector>

#include "mmopt/core.hpp"

namespace mmopt {

/// The five 2-D multimodal test functions, minimization orientation.
enum class FunctionId {
    F1SixHumpCamel,
    F2Ackley,
    F3Rastrigin,
    F4Shubert,
    F5DeJong5,
};

struct BenchmarkFunction {
    FunctionId id;
    std::string name;       // "f1" .. "f5"
    std::string long_name;
    Bounds bounds;          // dimension 2 for all shipped functions

    double evaluate(const Vec& x) const;
};

const BenchmarkFunction& benchmark(FunctionId id);
const std::vector<FunctionId>& all_functions();

/// Objective value at x. Rejects inputs of the wrong dimension.
double evaluate(FunctionId id, const Vec& x);

const char* function_name(FunctionId id);
/// Parses "f1" .. "f5"; throws with a listing of valid names otherwise.
FunctionId parse_function(const std::string& name);

} // namespace mmopt
