// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "zcfast/bench.hpp"
#include "zcfast/gauss.hpp"
#include "zcfast/oracle.hpp"
#include "zcfast/pattern.hpp"
#include "zcfast/transform.hpp"

using namespace zcfast;
using test::max_abs_diff;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

// worst |fast - naive| / sqrt(P) over the full grid for one direction
double fast_vs_naive_grid(Direction dir, std::int64_t& cases) {
    double worst = 0.0;
    for (std::int64_t P : test::primes_between(5, 199)) {
        const Prime p(P);
        for (std::int64_t u = 1; u < P; ++u) {
            std::set<std::int64_t> shifts{0, 1, (P - 1) / 2};
            for (std::int64_t ts : shifts) {
                const ZcParams params(p, u, ts);
                const TransformPlan plan(params, dir);
                const std::int64_t iu = mod_inverse(u, p);
                const std::int64_t expect_fs = dir == Direction::kDft
                                                   ? mod_reduce((P + 1) / 2 * (iu - 1) - ts, P)
                                                   : mod_reduce((P + 1) / 2 * (iu + 1) + ts, P);
                if (plan.frequency_shift() != expect_fs) return INFINITY;
                const auto z = zc_time(params);
                const auto truth = dir == Direction::kDft ? oracle::naive_dft(z) : oracle::naive_idft(z);
                worst = std::max(worst, max_abs_diff(execute(plan), truth) / std::sqrt(double(P)));
                ++cases;
            }
        }
    }
    return worst;
}

Outcome ac1_fast_dft() {
    std::int64_t cases = 0;
    const double worst = fast_vs_naive_grid(Direction::kDft, cases);
    return {worst <= 1e-9, fmt("max|fast-naive|/sqrt(P) = %.3e (tol 1e-9), ", worst) + std::to_string(cases) + " cases"};
}

Outcome ac2_fast_idft() {
    std::int64_t cases = 0;
    const double worst = fast_vs_naive_grid(Direction::kIdft, cases);
    return {worst <= 1e-9, fmt("max|fast-naive|/sqrt(P) = %.3e (tol 1e-9), ", worst) + std::to_string(cases) + " cases"};
}

Outcome ac3_gauss() {
    double worst = 0.0;
    std::set<std::pair<std::int64_t, int>> branches;
    for (std::int64_t P : test::primes_between(3, 199)) {
        const Prime p(P);
        for (std::int64_t u = 1; u < P; ++u) {
            const auto closed = gauss_sum_closed(p, u).value;
            const auto brute = oracle::brute_gauss_sum(ZcParams(p, u));
            worst = std::max(worst, std::abs(closed - brute) / std::sqrt(double(P)));
            branches.insert({P % 4, legendre(2 * u, p)});
        }
    }
    const bool covered = branches.count({1, 1}) && branches.count({1, -1}) && branches.count({3, 1}) &&
                         branches.count({3, -1});
    return {worst <= 1e-9 && covered,
            fmt("max|closed-brute|/sqrt(P) = %.3e (tol 1e-9), branches covered = %.0f/4", worst, double(branches.size()))};
}

Outcome ac4_counts() {
    bool ok = true;
    std::string detail;
    for (std::int64_t P : {13, 199, 839}) {
        OpCounters c;
        (void)execute(TransformPlan(ZcParams(Prime(P), 1 + P / 7, P / 5), Direction::kDft), &c);
        ok = ok && c.additions == 2 * (P - 1) && c.modulo_reductions == 2 * (P - 1) && c.exp_evaluations == P;
        detail += "P=" + std::to_string(P) + ": " + std::to_string(c.additions) + "/" +
                  std::to_string(c.modulo_reductions) + "/" + std::to_string(c.exp_evaluations) + "  ";
    }
    return {ok, detail + "(adds/mods/exps)"};
}

Outcome ac5_shift_relation() {
    std::int64_t checked = 0;
    for (std::int64_t P : test::primes_between(3, 199)) {
        const Prime p(P);
        for (std::int64_t u = 1; u < P; ++u) {
            const std::int64_t iu = mod_inverse(u, p);
            if (mod_reduce(conjugate_form_dft_shift(p, iu) - conjugate_form_idft_shift(p, iu), P) != 1) {
                return {false, "conjugate-form shift difference != 1 at P=" + std::to_string(P)};
            }
            ++checked;
        }
    }
    const Prime p(13);
    for (std::int64_t u = 1; u <= 12; ++u) {
        const ZcParams params(p, u);
        const auto pat = make_pattern(p, -u);
        const auto dft_fs = TransformPlan(params, Direction::kDft).frequency_shift();
        const auto idft_fs = TransformPlan(params, Direction::kIdft).frequency_shift();
        if (mod_reduce(dft_fs + pattern_dft_shift(flip_dft(pat)), 13) != 0 ||
            mod_reduce(idft_fs + pattern_idft_shift(flip_idft(pat)), 13) != 0) {
            return {false, "pattern/plan shift mismatch at u=" + std::to_string(u)};
        }
    }
    return {true, std::to_string(checked) + " (P,u) pairs with difference 1; P=13 pattern shifts == -plan shifts for u=1..12"};
}

Outcome ac6_cyclic_shift() {
    double worst = 0.0;
    std::int64_t cases = 0;
    for (std::int64_t P : test::primes_between(3, 61)) {
        const Prime p(P);
        for (std::int64_t u = 1; u < P; ++u) {
            std::set<std::int64_t> shifts{0, 1, 2 % P, (P - 1) / 2};
            for (std::int64_t ts : shifts) {
                const ZcParams params(p, u, ts);
                const auto appendix = oracle::appendix_shifted_dft(params);
                const auto naive = oracle::naive_dft(zc_time(params));
                const auto fast = execute(TransformPlan(params, Direction::kDft));
                const double e = std::max({max_abs_diff(appendix, naive), max_abs_diff(naive, fast),
                                           max_abs_diff(appendix, fast)});
                worst = std::max(worst, e / std::sqrt(double(P)));
                ++cases;
            }
        }
    }
    return {worst <= 1e-9, fmt("max pairwise err/sqrt(P) = %.3e (tol 1e-9), ", worst) + std::to_string(cases) + " cases"};
}

Outcome ac7_inverse_via_flip() {
    std::int64_t cases = 0;
    for (std::int64_t P : test::primes_between(3, 61)) {
        const Prime p(P);
        for (std::int64_t u = 1; u < P; ++u) {
            if (read_slope(flip_dft(make_pattern(p, -u))) != mod_reduce(-mod_inverse(u, p), P)) {
                return {false, "mismatch at P=" + std::to_string(P) + " u=" + std::to_string(u)};
            }
            ++cases;
        }
    }
    return {true, std::to_string(cases) + " (P,u) pairs"};
}

Outcome ac8_performance() {
    const auto start = std::chrono::steady_clock::now();
    const auto report = run_bench(ZcParams(Prime(839), 25), 100);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double ratio = report.naive_ns / report.fast_ns;
    return {ratio >= 20.0 && seconds < 30.0,
            fmt("naive/fast = %.1fx (floor 20x), bench took %.2f s (limit 30 s)", ratio, seconds) +
                fmt(", fast %.0f ns, naive %.0f ns", report.fast_ns, report.naive_ns)};
}

Outcome ac9_round_trip() {
    double worst = 0.0;
    std::int64_t cases = 0;
    for (std::int64_t P : {13, 139, 839}) {
        std::set<std::int64_t> roots{1, 2, 25 % P, (P - 1) / 2, P - 1};
        for (std::int64_t u : roots) {
            const ZcParams params(Prime(P), u, (P - 1) / 2);
            auto expect = zc_time(params);
            for (auto& v : expect) v *= double(P);
            const auto back = oracle::naive_idft(execute(TransformPlan(params, Direction::kDft)));
            worst = std::max(worst, max_abs_diff(back, expect) / double(P));
            ++cases;
        }
    }
    return {worst <= 1e-8, fmt("max err/P = %.3e (tol 1e-8), ", worst) + std::to_string(cases) + " cases"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 fast DFT vs naive oracle, P<=199", ac1_fast_dft},
        {"AC2 fast IDFT vs naive oracle, P<=199", ac2_fast_idft},
        {"AC3 Gauss sum closed form vs brute force", ac3_gauss},
        {"AC4 operation counts 2(P-1)/2(P-1)/P", ac4_counts},
        {"AC5 DFT/IDFT shift differ by 1; pattern vs plan", ac5_shift_relation},
        {"AC6 cyclic-shift identity, P<=61", ac6_cyclic_shift},
        {"AC7 inverse via flip, P<=61", ac7_inverse_via_flip},
        {"AC8 fast beats naive by >=20x at P=839", ac8_performance},
        {"AC9 round trip through unnormalized IDFT", ac9_round_trip},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = check();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %-50s %s  (%.2fs)\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
        failures += !o.passed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
