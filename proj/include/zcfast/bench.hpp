// Median wall-time comparison of the fast path against the closed-form
// reference and the O(P^2) oracle.

#pragma once

#include <cstdint>
#include <string>

#include "zcfast/transform.hpp"

namespace zcfast {

struct BenchReport {
    std::int64_t p = 0;
    std::int64_t u = 0;
    std::int64_t reps = 0;
    double fast_ns = 0.0;
    double fast_parallel_ns = 0.0;
    double reference_ns = 0.0;
    double naive_ns = 0.0;
    OpCounters counters;

    std::string to_json() const;
};

BenchReport run_bench(const ZcParams& params, std::int64_t reps);

}  // namespace zcfast
