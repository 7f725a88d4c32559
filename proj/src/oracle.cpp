#include "zcfast/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zcfast::oracle {

namespace {

struct KahanSum {
    double sum_re = 0.0, c_re = 0.0;
    double sum_im = 0.0, c_im = 0.0;

    static void add(double& sum, double& comp, double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    void operator+=(const Complex& v) {
        add(sum_re, c_re, v.real());
        add(sum_im, c_im, v.imag());
    }

    Complex value() const { return {sum_re, sum_im}; }
};

std::vector<Complex> roots_of_unity(std::size_t n, bool inverse) {
    std::vector<Complex> roots(n);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        roots[j] = {std::cos(angle), std::sin(angle)};
    }
    return roots;
}

Complex bin(const ComplexSequence& x, const std::vector<Complex>& roots, std::size_t k) {
    const std::size_t n = x.size();
    KahanSum acc;
    std::size_t idx = 0;  // n*k mod N, advanced incrementally
    for (std::size_t m = 0; m < n; ++m) {
        acc += x[m] * roots[idx];
        idx += k;
        if (idx >= n) idx -= n;
    }
    return acc.value();
}

ComplexSequence transform(const ComplexSequence& x, bool inverse, bool parallel) {
    const std::size_t n = x.size();
    const auto roots = roots_of_unity(n, inverse);
    ComplexSequence out(n);
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (std::int64_t k = 0; k < count; ++k) {
        out[static_cast<std::size_t>(k)] = bin(x, roots, static_cast<std::size_t>(k));
    }
    return out;
}

}  // namespace

ComplexSequence naive_dft(const ComplexSequence& x) { return transform(x, false, true); }

ComplexSequence naive_idft(const ComplexSequence& x) { return transform(x, true, true); }

ComplexSequence naive_transform_serial(const ComplexSequence& x, bool inverse) {
    return transform(x, inverse, false);
}

Complex brute_gauss_sum(const ZcParams& params) {
    if (params.ts != 0) throw std::invalid_argument("brute_gauss_sum requires Ts = 0");
    KahanSum acc;
    for (const Complex& z : zc_time(params)) acc += z;
    return acc.value();
}

ComplexSequence appendix_shifted_dft(const ZcParams& params) {
    const Prime& p = params.P;
    const std::int64_t P = p.value();
    const std::int64_t iu = mod_inverse(params.u, p);
    const Complex f0 = brute_gauss_sum(ZcParams(p, params.u, 0));
    const Complex at_shift = zc_sample(p, params.u, params.ts);

    ComplexSequence out(static_cast<std::size_t>(P));
    for (std::int64_t k = 0; k < P; ++k) {
        const std::int64_t arg = (iu * k + params.ts) % P;
        out[static_cast<std::size_t>(k)] = std::conj(zc_sample(p, params.u, arg)) * at_shift * f0;
    }
    return out;
}

}  // namespace zcfast::oracle
