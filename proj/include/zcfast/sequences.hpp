// Time-domain Zadoff-Chu sequences and linear micro-frequency-hopping (lmFH)
// symbols.
//
// A ZC sequence of prime length P and root u is
//     Z(k) = exp(-i*pi*u*(k+Ts)*(k+Ts+1)/P),
// and an lmFH symbol with slope s builds the same kind of waveform by
// accumulating integer frequency points s*t (mod P). The two generators here
// take those two routes independently; L_{-u} == Z_u ties them together.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zcfast/numtheory.hpp"

namespace zcfast {

using Complex = std::complex<double>;
using ComplexSequence = std::vector<Complex>;

/// Problem instance: prime length, root in [1, P-1], cyclic shift in [0, P-1].
struct ZcParams {
    ZcParams(Prime p, std::int64_t root, std::int64_t shift = 0);

    Prime P;
    std::int64_t u;
    std::int64_t ts;
};

struct LmfhParams {
    LmfhParams(Prime p, std::int64_t slope, std::int64_t freq_shift = 0, double phase_offset = 0.0);

    Prime P;
    std::int64_t s;
    std::int64_t fs;  // bins
    double po;        // radians
};

/// exp(i*pi*numerator/P) with the numerator first reduced mod 2P.
Complex half_turn_phasor(std::int64_t numerator, const Prime& p);

/// exp(i*2*pi*numerator/P) with the numerator first reduced mod P.
Complex turn_phasor(std::int64_t numerator, const Prime& p);

/// Z_u(m) for any integer index m; periodic in m with period P.
Complex zc_sample(const Prime& p, std::int64_t u, std::int64_t m);

ComplexSequence zc_time(const ZcParams& params);

/// Phase built by accumulating s*t + Fs' (mod P), Fs' = 0 at t = 0.
ComplexSequence lmfh_symbol(const LmfhParams& params);

/// Instantaneous frequency of the pattern: centered(-u*(t+Ts)) for t = 0..P-1.
std::vector<CenteredResidue> frequency_track(const ZcParams& params);

}  // namespace zcfast
