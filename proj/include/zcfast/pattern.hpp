// lmFH patterns: the (time, frequency) point sets of linear micro-frequency
// hopping symbols, and the reflections that turn a time-domain pattern into
// the pattern of its DFT or IDFT.
//
// Time indices live in [0, P-1]; frequencies are centered residues. When a
// flip swaps the axes, each coordinate is converted to the other's
// representation. Orientation is metadata: a determinant -1 flip toggles it,
// and a reverse-side pattern stands for the complex conjugate.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zcfast/numtheory.hpp"

namespace zcfast {

enum class Orientation { kObverse, kReverse };

struct PatternPoint {
    std::int64_t t;
    std::int64_t f;

    friend bool operator==(const PatternPoint&, const PatternPoint&) = default;
};

struct LmfhPattern {
    Prime P;
    std::vector<PatternPoint> points;  // sorted by t, one per t
    Orientation orientation = Orientation::kObverse;

    friend bool operator==(const LmfhPattern&, const LmfhPattern&) = default;
};

/// f(t) = centered(slope*(t+Ts) + Fs). Fs is a plain offset on every point;
/// the Fs' = 0 at t = 0 rule applies to accumulated phase, not to the pattern.
LmfhPattern make_pattern(const Prime& p, std::int64_t slope, std::int64_t fs = 0, std::int64_t ts = 0);

/// Reflection across f = t: (t, f) -> (f, t).
LmfhPattern flip_dft(const LmfhPattern& pattern);

/// Reflection across f = -t: (t, f) -> (-f, -t).
LmfhPattern flip_idft(const LmfhPattern& pattern);

/// Reflection across the frequency axis: (t, f) -> (-t, f).
LmfhPattern flip_conjugate(const LmfhPattern& pattern);

/// Point reflection (t, f) -> (-t, -f). Determinant +1, orientation kept.
LmfhPattern negate_coordinates(const LmfhPattern& pattern);

/// Slope in [0, P-1]. Throws std::domain_error if the points are not affine mod P.
std::int64_t read_slope(const LmfhPattern& pattern);

/// Frequency shift of a flip_dft pattern, in [0, P-1]: the old time of the
/// most negative frequency point, measured from -(P-1)/2.
std::int64_t pattern_dft_shift(const LmfhPattern& flipped);

/// Frequency shift of a flip_idft pattern, in [0, P-1], measured from the
/// most positive frequency point.
std::int64_t pattern_idft_shift(const LmfhPattern& flipped);

/// CSV with header "t,f,orientation", rows sorted by t.
std::string export_pattern(const LmfhPattern& pattern);

const char* to_string(Orientation orientation);

}  // namespace zcfast
