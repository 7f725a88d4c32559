#include "zcfast/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "zcfast/oracle.hpp"

namespace zcfast {

namespace {

template <typename Fn>
double median_ns(std::int64_t reps, Fn fn) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(reps));
    volatile double sink = 0.0;
    for (std::int64_t r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const ComplexSequence out = fn();
        const auto stop = std::chrono::steady_clock::now();
        sink = sink + out.back().real();
        samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
    }
    std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2), samples.end());
    return samples[samples.size() / 2];
}

}  // namespace

BenchReport run_bench(const ZcParams& params, std::int64_t reps) {
    if (reps < 1) throw std::invalid_argument("reps must be at least 1");
    BenchReport report;
    report.p = params.P.value();
    report.u = params.u;
    report.reps = reps;

    // plan construction happens once and sits outside the timed region
    const TransformPlan plan(params, Direction::kDft);
    const ComplexSequence z = zc_time(params);

    report.fast_ns = median_ns(reps, [&] { return execute(plan); });
    report.fast_parallel_ns = median_ns(reps, [&] { return execute_parallel(plan); });
    report.reference_ns = median_ns(reps, [&] { return dft_reference(params); });
    report.naive_ns = median_ns(reps, [&] { return oracle::naive_transform_serial(z, false); });

    (void)execute(plan, &report.counters);
    return report;
}

std::string BenchReport::to_json() const {
    const nlohmann::json doc = {
        {"p", p},
        {"u", u},
        {"reps", reps},
        {"fast_ns", fast_ns},
        {"fast_parallel_ns", fast_parallel_ns},
        {"reference_ns", reference_ns},
        {"naive_ns", naive_ns},
        {"additions", counters.additions},
        {"modulo_reductions", counters.modulo_reductions},
        {"exp_evaluations", counters.exp_evaluations},
    };
    return doc.dump(2);
}

}  // namespace zcfast
