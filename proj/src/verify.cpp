#include "zcfast/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>

#include "zcfast/gauss.hpp"
#include "zcfast/oracle.hpp"
#include "zcfast/pattern.hpp"
#include "zcfast/transform.hpp"

namespace zcfast {

bool VerifyReport::all_passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& r) { return r.passed; });
}

void VerifyReport::print(std::ostream& os) const {
    for (const auto& r : properties) {
        os << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(44) << r.name << " cases=" << std::setw(7)
           << r.cases << " max_err=" << std::scientific << std::setprecision(3) << r.max_error
           << " tol=" << r.tolerance << std::defaultfloat << '\n';
    }
    os << (all_passed() ? "all properties passed" : "verification FAILED") << " (" << properties.size()
       << " properties)\n";
}

std::vector<std::int64_t> odd_primes_up_to(std::int64_t pmax) {
    std::vector<std::int64_t> primes;
    for (std::int64_t n = 3; n <= pmax; n += 2) {
        if (is_prime(n)) primes.push_back(n);
    }
    return primes;
}

namespace {

struct Case {
    std::int64_t P, u, ts;
};

double max_abs_diff(const ComplexSequence& a, const ComplexSequence& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Max of fn over cases; cases are independent so they fan out freely.
template <typename Fn>
double sweep(const std::vector<Case>& cases, Fn fn) {
    double worst = 0.0;
    const auto n = static_cast<std::int64_t>(cases.size());
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
    for (std::int64_t i = 0; i < n; ++i) worst = std::max(worst, fn(cases[static_cast<std::size_t>(i)]));
    return worst;
}

std::vector<std::int64_t> roots_for(std::int64_t P) {
    std::vector<std::int64_t> roots;
    if (P <= 199) {
        for (std::int64_t u = 1; u < P; ++u) roots.push_back(u);
    } else {
        const std::int64_t step = std::max<std::int64_t>(1, (P - 1) / 32);
        for (std::int64_t u = 1; u < P && roots.size() < 32; u += step) roots.push_back(u);
    }
    return roots;
}

std::vector<Case> grid(const std::vector<std::int64_t>& primes, std::vector<std::int64_t> (*shifts)(std::int64_t)) {
    std::vector<Case> cases;
    for (std::int64_t P : primes) {
        for (std::int64_t u : roots_for(P)) {
            std::set<std::int64_t> uniq;
            for (std::int64_t ts : shifts(P)) {
                if (uniq.insert(ts).second) cases.push_back({P, u, ts});
            }
        }
    }
    return cases;
}

std::vector<std::int64_t> standard_shifts(std::int64_t P) { return {0, 1, (P - 1) / 2}; }
std::vector<std::int64_t> appendix_shifts(std::int64_t P) { return {0, 1, 2 % P, (P - 1) / 2}; }
std::vector<std::int64_t> no_shift(std::int64_t) { return {0}; }

class Recorder {
public:
    void add(std::string name, double max_error, double tolerance, std::int64_t cases) {
        report_.properties.push_back({std::move(name), max_error <= tolerance, max_error, tolerance, cases});
    }
    VerifyReport take() { return std::move(report_); }

private:
    VerifyReport report_;
};

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    Recorder rec;
    const auto primes = odd_primes_up_to(options.pmax);
    auto transform_primes = primes;
    if (options.include_839) transform_primes.push_back(839);
    std::vector<std::int64_t> small_primes;
    std::copy_if(primes.begin(), primes.end(), std::back_inserter(small_primes), [](std::int64_t p) { return p <= 61; });

    const auto all_roots = grid(primes, no_shift);
    const auto shifted = grid(transform_primes, standard_shifts);
    const auto small_shifted = grid(small_primes, appendix_shifts);
    const auto small_roots = grid(small_primes, no_shift);
    const std::int64_t fault = options.fs_fault;

    auto fast_plan = [fault](const ZcParams& params, Direction dir) {
        TransformPlan plan(params, dir);
        return fault == 0 ? plan : plan.with_shifted_frequency(fault);
    };

    // numtheory
    rec.add("numtheory.inverse_identity", sweep(all_roots, [](const Case& c) {
                const Prime p(c.P);
                return (c.u * mod_inverse(c.u, p)) % c.P == 1 ? 0.0 : 1.0;
            }), 0.0, static_cast<std::int64_t>(all_roots.size()));

    {
        std::vector<Case> per_prime;
        for (auto P : primes) per_prime.push_back({P, 0, 0});
        rec.add("numtheory.legendre_euler_vs_enumeration", sweep(per_prime, [](const Case& c) {
                    const Prime p(c.P);
                    std::vector<bool> square(static_cast<std::size_t>(c.P), false);
                    for (std::int64_t x = 1; x < c.P; ++x) square[static_cast<std::size_t>(x * x % c.P)] = true;
                    std::int64_t residues = 0;
                    for (std::int64_t a = 0; a < c.P; ++a) {
                        const int expect = a == 0 ? 0 : (square[static_cast<std::size_t>(a)] ? 1 : -1);
                        if (legendre(a, p) != expect) return 1.0;
                        if (legendre(a * a, p) < 0) return 1.0;
                        if (legendre(a, p) * legendre(a + 1, p) != legendre(a * (a + 1), p)) return 1.0;
                        residues += expect == 1;
                    }
                    return residues == p.half() ? 0.0 : 1.0;
                }), 0.0, static_cast<std::int64_t>(per_prime.size()));

        rec.add("numtheory.centered_residue", sweep(per_prime, [](const Case& c) {
                    const Prime p(c.P);
                    for (std::int64_t x = -3 * c.P; x <= 3 * c.P; ++x) {
                        const auto r = centered(x, p);
                        if (r.value < -p.half() || r.value > p.half() || (r.value - x) % c.P != 0) return 1.0;
                    }
                    return 0.0;
                }), 0.0, static_cast<std::int64_t>(per_prime.size()));
    }

    // sequences
    rec.add("sequences.lmfh_conjugacy", sweep(all_roots, [](const Case& c) {
                const Prime p(c.P);
                const auto z = zc_time(ZcParams(p, c.u));
                auto zc = z;
                for (auto& v : zc) v = std::conj(v);
                return std::max(max_abs_diff(lmfh_symbol(LmfhParams(p, -c.u)), z),
                                max_abs_diff(lmfh_symbol(LmfhParams(p, c.u)), zc));
            }), 1e-12, static_cast<std::int64_t>(all_roots.size()));

    rec.add("sequences.constant_amplitude", sweep(shifted, [](const Case& c) {
                double worst = 0.0;
                for (const auto& z : zc_time(ZcParams(Prime(c.P), c.u, c.ts))) worst = std::max(worst, std::abs(std::abs(z) - 1.0));
                for (const auto& z : lmfh_symbol(LmfhParams(Prime(c.P), c.u, c.ts, 0.25))) worst = std::max(worst, std::abs(std::abs(z) - 1.0));
                return worst;
            }), 1e-12, static_cast<std::int64_t>(shifted.size()));

    {
        std::vector<Case> sampled;
        for (auto P : primes) {
            std::set<std::int64_t> us{1, 2 % P, (P - 1) / 2, P - 1};
            for (auto u : us) sampled.push_back({P, u, 0});
        }
        rec.add("sequences.periodic_autocorrelation", sweep(sampled, [](const Case& c) {
                    const auto z = zc_time(ZcParams(Prime(c.P), c.u));
                    const auto n = z.size();
                    double worst = 0.0;
                    for (std::size_t d = 1; d < n; ++d) {
                        Complex acc{};
                        for (std::size_t k = 0; k < n; ++k) acc += z[k] * std::conj(z[(k + d) % n]);
                        worst = std::max(worst, std::abs(acc) / static_cast<double>(n));
                    }
                    return worst;
                }), 1e-9, static_cast<std::int64_t>(sampled.size()));
    }

    rec.add("sequences.cyclic_shift_exact", sweep(shifted, [](const Case& c) {
                const Prime p(c.P);
                const auto base = zc_time(ZcParams(p, c.u));
                const auto rot = zc_time(ZcParams(p, c.u, c.ts));
                for (std::size_t k = 0; k < base.size(); ++k) {
                    if (rot[k] != base[(k + static_cast<std::size_t>(c.ts)) % base.size()]) return 1.0;
                }
                return 0.0;
            }), 0.0, static_cast<std::int64_t>(shifted.size()));

    // gauss
    rec.add("gauss.closed_vs_brute", sweep(all_roots, [](const Case& c) {
                const Prime p(c.P);
                const auto closed = gauss_sum_closed(p, c.u);
                return std::abs(closed.value - oracle::brute_gauss_sum(ZcParams(p, c.u))) / std::sqrt(double(c.P));
            }), 1e-9, static_cast<std::int64_t>(all_roots.size()));

    rec.add("gauss.polar_vs_product_form", sweep(all_roots, [](const Case& c) {
                const Prime p(c.P);
                const auto g = gauss_sum_closed(p, c.u);
                return std::max(std::abs(g.value - gauss_phasor(p, g.qpo_times4)),
                                std::abs(std::abs(g.value) - std::sqrt(double(c.P))));
            }), 1e-12, static_cast<std::int64_t>(all_roots.size()));

    {
        // both P mod 4 classes and both Legendre signs must be exercised
        std::set<std::pair<int, int>> branches;
        for (const auto& c : all_roots) {
            const Prime p(c.P);
            (void)quasi_phase_offset4(p, c.u);
            branches.insert({int(c.P % 4), legendre(2 * c.u, p)});
        }
        rec.add("gauss.qpo_integral_branch_coverage", branches.size() == 4 ? 0.0 : 1.0, 0.0,
                static_cast<std::int64_t>(all_roots.size()));
    }

    // transform
    auto fast_vs_naive = [&](Direction dir) {
        return sweep(shifted, [&](const Case& c) {
            const ZcParams params(Prime(c.P), c.u, c.ts);
            const auto z = zc_time(params);
            const auto truth = dir == Direction::kDft ? oracle::naive_dft(z) : oracle::naive_idft(z);
            return max_abs_diff(execute(fast_plan(params, dir)), truth) / std::sqrt(double(c.P));
        });
    };
    rec.add("transform.fast_dft_vs_naive", fast_vs_naive(Direction::kDft), 1e-9, static_cast<std::int64_t>(shifted.size()));
    rec.add("transform.fast_idft_vs_naive", fast_vs_naive(Direction::kIdft), 1e-9, static_cast<std::int64_t>(shifted.size()));

    rec.add("transform.fast_vs_reference", sweep(shifted, [&](const Case& c) {
                const ZcParams params(Prime(c.P), c.u, c.ts);
                const double a = max_abs_diff(execute(fast_plan(params, Direction::kDft)), dft_reference(params));
                const double b = max_abs_diff(execute(fast_plan(params, Direction::kIdft)), idft_reference(params));
                return std::max(a, b) / std::sqrt(double(c.P));
            }), 1e-10, static_cast<std::int64_t>(shifted.size()));

    rec.add("transform.round_trip", sweep(shifted, [&](const Case& c) {
                const ZcParams params(Prime(c.P), c.u, c.ts);
                auto z = zc_time(params);
                for (auto& v : z) v *= double(c.P);
                return max_abs_diff(oracle::naive_idft(execute(fast_plan(params, Direction::kDft))), z) / double(c.P);
            }), 1e-8, static_cast<std::int64_t>(shifted.size()));

    rec.add("transform.constant_spectrum_magnitude", sweep(shifted, [&](const Case& c) {
                const ZcParams params(Prime(c.P), c.u, c.ts);
                double worst = 0.0;
                for (const auto& x : execute(fast_plan(params, Direction::kDft))) {
                    worst = std::max(worst, std::abs(std::abs(x) - std::sqrt(double(c.P))));
                }
                return worst;
            }), 1e-9, static_cast<std::int64_t>(shifted.size()));

    rec.add("transform.dft_idft_shift_relation", sweep(shifted, [](const Case& c) {
                const ZcParams params(Prime(c.P), c.u, c.ts);
                const TransformPlan dft(params, Direction::kDft);
                const TransformPlan idft(params, Direction::kIdft, dft.shared_twiddles());
                const std::int64_t iu = dft.inverse_root();
                bool ok = mod_reduce(conjugate_form_dft_shift(params.P, iu) - conjugate_form_idft_shift(params.P, iu), c.P) == 1;
                ok = ok && mod_reduce(idft.frequency_shift() - dft.frequency_shift() - 2 * c.ts, c.P) == 1;
                ok = ok && iu == idft.inverse_root() && dft.qpo_times4() == idft.qpo_times4() &&
                     dft.const_factor() == idft.const_factor();
                return ok ? 0.0 : 1.0;
            }), 0.0, static_cast<std::int64_t>(shifted.size()));

    rec.add("transform.operation_counts", sweep(shifted, [](const Case& c) {
                OpCounters counters;
                (void)execute(TransformPlan(ZcParams(Prime(c.P), c.u, c.ts), Direction::kDft), &counters);
                const bool ok = counters.additions == 2 * (c.P - 1) && counters.modulo_reductions == 2 * (c.P - 1) &&
                                counters.exp_evaluations == c.P;
                return ok ? 0.0 : 1.0;
            }), 0.0, static_cast<std::int64_t>(shifted.size()));

    rec.add("transform.parallel_matches_serial", sweep(shifted, [](const Case& c) {
                const TransformPlan plan(ZcParams(Prime(c.P), c.u, c.ts), Direction::kIdft);
                return execute(plan) == execute_parallel(plan) ? 0.0 : 1.0;
            }), 0.0, static_cast<std::int64_t>(shifted.size()));

    // oracle
    rec.add("oracle.appendix_shifted_dft", sweep(small_shifted, [&](const Case& c) {
                const ZcParams params(Prime(c.P), c.u, c.ts);
                const auto appendix = oracle::appendix_shifted_dft(params);
                const double a = max_abs_diff(appendix, oracle::naive_dft(zc_time(params)));
                const double b = max_abs_diff(appendix, execute(fast_plan(params, Direction::kDft)));
                return std::max(a, b) / std::sqrt(double(c.P));
            }), 1e-9, static_cast<std::int64_t>(small_shifted.size()));

    {
        std::vector<Case> per_prime;
        for (auto P : primes) per_prime.push_back({P, 0, 0});
        rec.add("oracle.dft_idft_adjoint", sweep(per_prime, [](const Case& c) {
                    std::mt19937_64 rng(static_cast<std::uint64_t>(c.P));
                    std::normal_distribution<double> g;
                    ComplexSequence x(static_cast<std::size_t>(c.P)), y(x.size());
                    for (auto& v : x) v = {g(rng), g(rng)};
                    for (auto& v : y) v = {g(rng), g(rng)};
                    auto normalize = [](ComplexSequence& s) {
                        double n2 = 0.0;
                        for (auto& v : s) n2 += std::norm(v);
                        for (auto& v : s) v /= std::sqrt(n2);
                    };
                    normalize(x);
                    normalize(y);
                    const auto fx = oracle::naive_dft(x);
                    const auto gy = oracle::naive_idft(y);
                    Complex lhs{}, rhs{};
                    for (std::size_t i = 0; i < x.size(); ++i) {
                        lhs += fx[i] * std::conj(y[i]);
                        rhs += x[i] * std::conj(gy[i]);
                    }
                    return std::abs(lhs - rhs) / double(c.P);
                }), 1e-9, static_cast<std::int64_t>(per_prime.size()));
    }

    // pattern
    rec.add("pattern.inverse_via_flip", sweep(small_roots, [](const Case& c) {
                const Prime p(c.P);
                const auto slope = read_slope(flip_dft(make_pattern(p, -c.u)));
                return slope == mod_reduce(-mod_inverse(c.u, p), c.P) ? 0.0 : 1.0;
            }), 0.0, static_cast<std::int64_t>(small_roots.size()));

    rec.add("pattern.flip_involutions", sweep(small_shifted, [](const Case& c) {
                const auto pat = make_pattern(Prime(c.P), -c.u, 0, c.ts);
                const auto d = flip_dft(pat);
                const bool ok = flip_dft(d) == pat && flip_idft(flip_idft(pat)) == pat &&
                                flip_conjugate(flip_conjugate(pat)) == pat && d.orientation == Orientation::kReverse &&
                                flip_idft(pat) == negate_coordinates(d);
                return ok ? 0.0 : 1.0;
            }), 0.0, static_cast<std::int64_t>(small_shifted.size()));

    rec.add("pattern.time_shift_to_frequency_shift", sweep(small_shifted, [](const Case& c) {
                const Prime p(c.P);
                const auto shifted_flip = flip_dft(make_pattern(p, -c.u, 0, c.ts));
                auto expect = flip_dft(make_pattern(p, -c.u));
                for (auto& pt : expect.points) pt.f = centered(pt.f - c.ts, p).value;
                return shifted_flip == expect ? 0.0 : 1.0;
            }), 0.0, static_cast<std::int64_t>(small_shifted.size()));

    rec.add("pattern.shift_matches_plan", sweep(small_roots, [](const Case& c) {
                const Prime p(c.P);
                const ZcParams params(p, c.u);
                const auto pat = make_pattern(p, -c.u);
                const bool ok =
                    mod_reduce(TransformPlan(params, Direction::kDft).frequency_shift() + pattern_dft_shift(flip_dft(pat)), c.P) == 0 &&
                    mod_reduce(TransformPlan(params, Direction::kIdft).frequency_shift() + pattern_idft_shift(flip_idft(pat)), c.P) == 0;
                return ok ? 0.0 : 1.0;
            }), 0.0, static_cast<std::int64_t>(small_roots.size()));

    return rec.take();
}

}  // namespace zcfast
