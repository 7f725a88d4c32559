// O(P) DFT / IDFT of prime-length Zadoff-Chu sequences.
//
// The spectrum of a ZC sequence is itself an lmFH symbol with slope -u^-1,
// frequency shift Fs and a constant phasor F_u(0):
//
//     X(k) = sqrt(P) * exp(-i*2*pi*(sum_{t=0..k}(-u^-1*t + Fs') - QPo) / P)
//
// with Fs' = 0 at t = 0. The fast path walks this sum with two integer
// accumulators (frequency and phase, both mod P) and a table of P-th roots of
// unity, then multiplies in the precomputed constant sqrt(P)*exp(i*2*pi*QPo/P).
//
//     DFT:  Fs = (P+1)/2 * (u^-1 - 1) - Ts   (mod P)
//     IDFT: Fs = (P+1)/2 * (u^-1 + 1) + Ts   (mod P)
//
// Kernels are exp(-i*2*pi*n*k/P) forward and exp(+i*2*pi*n*k/P) inverse,
// both unnormalized.
//
// execute() is the serial reference kernel and is the only one that counts
// operations. execute_parallel() splits the bins into chunks, seeds each
// chunk's accumulators in closed form and produces bit-identical output.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "zcfast/sequences.hpp"

namespace zcfast {

enum class Direction { kDft, kIdft };

struct OpCounters {
    std::int64_t additions = 0;
    std::int64_t modulo_reductions = 0;
    std::int64_t exp_evaluations = 0;
};

/// P-th roots of unity, w[j] = exp(-i*2*pi*j/P).
class TwiddleTable {
public:
    explicit TwiddleTable(const Prime& p);

    const Complex& operator[](std::int64_t j) const noexcept { return table_[static_cast<std::size_t>(j)]; }
    std::size_t size() const noexcept { return table_.size(); }

private:
    std::vector<Complex> table_;
};

class TransformPlan {
public:
    TransformPlan(const ZcParams& params, Direction direction);

    /// Reuses another plan's twiddle table (same P).
    TransformPlan(const ZcParams& params, Direction direction, std::shared_ptr<const TwiddleTable> twiddles);

    const ZcParams& params() const noexcept { return params_; }
    Direction direction() const noexcept { return direction_; }
    std::int64_t inverse_root() const noexcept { return iu_; }
    int legendre_2u() const noexcept { return ell_; }
    std::int64_t frequency_shift() const noexcept { return fs_; }
    std::int64_t qpo_times4() const noexcept { return qpo_times4_; }
    const Complex& const_factor() const noexcept { return const_factor_; }
    const TwiddleTable& twiddles() const noexcept { return *twiddles_; }
    std::shared_ptr<const TwiddleTable> shared_twiddles() const noexcept { return twiddles_; }

    /// Copy of this plan with Fs moved by delta. Exists to mutation-test the
    /// verification suite; never needed for correct transforms.
    TransformPlan with_shifted_frequency(std::int64_t delta) const;

private:
    ZcParams params_;
    Direction direction_;
    std::int64_t iu_;
    int ell_;
    std::int64_t fs_;
    std::int64_t qpo_times4_;
    Complex const_factor_;
    std::shared_ptr<const TwiddleTable> twiddles_;
};

std::int64_t dft_frequency_shift(const ZcParams& params, std::int64_t iu);
std::int64_t idft_frequency_shift(const ZcParams& params, std::int64_t iu);

ComplexSequence execute(const TransformPlan& plan, OpCounters* counters = nullptr);

ComplexSequence execute_parallel(const TransformPlan& plan);

/// Closed-form conjugate-free spectrum, evaluated termwise:
/// X(k) = Z_{-u^-1}(k) * exp(i*2*pi*((P+1)/2*(1-u^-1) + Ts)*k/P) * F_u(0).
ComplexSequence dft_reference(const ZcParams& params);

/// X(k) = conj(Z_{u^-1}(k)) * exp(i*2*pi*((P-1)/2*(u^-1+1) - Ts)*k/P) * F_u(0).
ComplexSequence idft_reference(const ZcParams& params);

/// Frequency shift of the conjugate form for the DFT, (P+1)/2*(1-u^-1) mod P.
std::int64_t conjugate_form_dft_shift(const Prime& p, std::int64_t iu);

/// Frequency shift of the conjugate form for the IDFT, (P-1)/2*(u^-1+1) mod P.
std::int64_t conjugate_form_idft_shift(const Prime& p, std::int64_t iu);

}  // namespace zcfast
