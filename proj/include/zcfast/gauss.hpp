// Closed-form cumulative sum F_u(0) = sum_n Z_u(n) of a prime-length ZC
// sequence, from the generalized quadratic Gauss sum:
//
//     F_u(0) = sqrt(P) * (2u/P) * eta_P * exp(i*2*pi*u*(2^-1)^3 / P),
//     eta_P  = 1 for P = 1 (mod 4), -i for P = 3 (mod 4).
//
// The same constant in polar form is sqrt(P) * exp(i*2*pi*QPo/P) with the
// quasi phase offset
//
//     QPo = ((3 - 2*(2u/P) - P mod 4) * P + u*(P+1)^3) / 8,
//
// which is a quarter-integer in general. It is carried as the exact integer
// 4*QPo.

#pragma once

#include <cstdint>

#include "zcfast/numtheory.hpp"
#include "zcfast/sequences.hpp"

namespace zcfast {

using Int128 = __int128;

struct GaussSumResult {
    double magnitude;
    std::int64_t qpo_times4;  // 4*QPo reduced into [0, 4P)
    Complex value;
};

/// Exact 4*QPo, unreduced. u*(P+1)^3 is formed in 128-bit arithmetic, which
/// covers every P up to 2^31.
Int128 quasi_phase_offset4(const Prime& p, std::int64_t u);

/// 4*QPo mod 4P; only this residue affects the phase.
std::int64_t quasi_phase_offset4_reduced(const Prime& p, std::int64_t u);

/// sqrt(P) * exp(i*2*pi*(qpo_times4/4)/P).
Complex gauss_phasor(const Prime& p, std::int64_t qpo_times4);

/// Evaluates the product form (Legendre symbol, eta_P, cubed half-inverse)
/// for the value, and fills qpo_times4 from the polar form.
GaussSumResult gauss_sum_closed(const Prime& p, std::int64_t u);

}  // namespace zcfast
