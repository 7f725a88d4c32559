// Brute-force ground truth for the fast transforms. O(P^2), Kahan-compensated,
// and deliberately independent of the transform module: it builds its own
// roots of unity and never touches a TransformPlan.

#pragma once

#include "zcfast/sequences.hpp"

namespace zcfast::oracle {

/// X[k] = sum_n x[n] * exp(-i*2*pi*n*k/N); N = x.size().
ComplexSequence naive_dft(const ComplexSequence& x);

/// X[k] = sum_n x[n] * exp(+i*2*pi*n*k/N), unnormalized.
ComplexSequence naive_idft(const ComplexSequence& x);

/// Single-threaded variant of naive_dft / naive_idft; same bits.
ComplexSequence naive_transform_serial(const ComplexSequence& x, bool inverse);

/// Direct sum of the unshifted ZC sequence. Throws if params.ts != 0.
Complex brute_gauss_sum(const ZcParams& params);

/// X(k) = conj(Z_u(u^-1*k + Ts)) * Z_u(Ts) * F_u(0), index taken mod P and
/// F_u(0) from brute_gauss_sum.
ComplexSequence appendix_shifted_dft(const ZcParams& params);

}  // namespace zcfast::oracle
