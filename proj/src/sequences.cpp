#include "zcfast/sequences.hpp"

#include <numbers>
#include <stdexcept>

namespace zcfast {

ZcParams::ZcParams(Prime p, std::int64_t root, std::int64_t shift) : P(p), u(root), ts(shift) {
    if (u < 1 || u > P.value() - 1) throw std::invalid_argument("root u must lie in [1, P-1]");
    if (ts < 0 || ts > P.value() - 1) throw std::invalid_argument("cyclic shift must lie in [0, P-1]");
}

LmfhParams::LmfhParams(Prime p, std::int64_t slope, std::int64_t freq_shift, double phase_offset)
    : P(p), s(slope), fs(freq_shift), po(phase_offset) {
    if (mod_reduce(s, P.value()) == 0) throw std::invalid_argument("lmFH slope must be nonzero mod P");
}

Complex half_turn_phasor(std::int64_t numerator, const Prime& p) {
    const std::int64_t two_p = 2 * p.value();
    std::int64_t n = mod_reduce(numerator, two_p);
    if (n > p.value()) n -= two_p;  // angle in (-pi, pi]
    return std::polar(1.0, static_cast<double>(n) * std::numbers::pi / static_cast<double>(p.value()));
}

Complex turn_phasor(std::int64_t numerator, const Prime& p) {
    return half_turn_phasor(2 * mod_reduce(numerator, p.value()), p);
}

Complex zc_sample(const Prime& p, std::int64_t u, std::int64_t m) {
    const std::int64_t two_p = 2 * p.value();
    const auto mod = static_cast<unsigned __int128>(two_p);
    const auto r = static_cast<unsigned __int128>(mod_reduce(m, p.value()));
    const auto ur = static_cast<unsigned __int128>(mod_reduce(u, two_p));
    const auto quad = static_cast<std::int64_t>(r * (r + 1) % mod * ur % mod);
    return half_turn_phasor(-quad, p);
}

ComplexSequence zc_time(const ZcParams& params) {
    const std::int64_t n = params.P.value();
    ComplexSequence out(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = zc_sample(params.P, params.u, k + params.ts);
    }
    return out;
}

ComplexSequence lmfh_symbol(const LmfhParams& params) {
    const std::int64_t n = params.P.value();
    const std::int64_t slope = mod_reduce(params.s, n);
    const std::int64_t shift = mod_reduce(params.fs, n);
    const Complex offset = std::polar(1.0, params.po);

    ComplexSequence out(static_cast<std::size_t>(n));
    std::int64_t freq = 0;
    std::int64_t phase = 0;
    for (std::int64_t k = 0; k < n; ++k) {
        if (k > 0) {
            // frequency point for t = k is s*k + Fs
            freq = (freq + slope) % n;
            phase = (phase + freq + shift) % n;
        }
        out[static_cast<std::size_t>(k)] = params.po == 0.0 ? turn_phasor(phase, params.P)
                                                            : turn_phasor(phase, params.P) * offset;
    }
    return out;
}

std::vector<CenteredResidue> frequency_track(const ZcParams& params) {
    const std::int64_t n = params.P.value();
    std::vector<CenteredResidue> track;
    track.reserve(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        track.push_back(centered(-params.u * mod_reduce(t + params.ts, n), params.P));
    }
    return track;
}

}  // namespace zcfast
