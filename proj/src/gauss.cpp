#include "zcfast/gauss.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zcfast {

namespace {

void check_root(const Prime& p, std::int64_t u) {
    if (u < 1 || u > p.value() - 1) throw std::invalid_argument("root u must lie in [1, P-1]");
}

}  // namespace

Int128 quasi_phase_offset4(const Prime& p, std::int64_t u) {
    check_root(p, u);
    const Int128 P = p.value();
    const Int128 ell = legendre(2 * u, p);
    const Int128 numerator = (3 - 2 * ell - P % 4) * P + Int128{u} * (P + 1) * (P + 1) * (P + 1);
    // (P+1)^3 is a multiple of 8, and the bracket is 0 or 4 (P = 1 mod 4)
    // or +-2 (P = 3 mod 4), so the numerator is always even.
    if (numerator % 2 != 0) throw std::logic_error("4*QPo is not an integer");
    return numerator / 2;
}

std::int64_t quasi_phase_offset4_reduced(const Prime& p, std::int64_t u) {
    const Int128 four_p = 4 * Int128{p.value()};
    Int128 r = quasi_phase_offset4(p, u) % four_p;
    if (r < 0) r += four_p;
    return static_cast<std::int64_t>(r);
}

Complex gauss_phasor(const Prime& p, std::int64_t qpo_times4) {
    const std::int64_t four_p = 4 * p.value();
    std::int64_t q = mod_reduce(qpo_times4, four_p);
    if (q > 2 * p.value()) q -= four_p;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(four_p);
    return std::polar(std::sqrt(static_cast<double>(p.value())), angle);
}

GaussSumResult gauss_sum_closed(const Prime& p, std::int64_t u) {
    check_root(p, u);
    const std::int64_t P = p.value();
    const int ell = legendre(2 * u, p);
    const Complex eta = (P % 4 == 1) ? Complex{1.0, 0.0} : Complex{0.0, -1.0};
    const std::int64_t half_inv = p.inverse_of_two();
    const std::int64_t cube = half_inv * half_inv % P * half_inv % P;
    const Complex value = std::sqrt(static_cast<double>(P)) * static_cast<double>(ell) * eta *
                          turn_phasor(u * cube % P, p);
    return {std::sqrt(static_cast<double>(P)), quasi_phase_offset4_reduced(p, u), value};
}

}  // namespace zcfast
