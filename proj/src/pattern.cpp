#include "zcfast/pattern.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zcfast {

namespace {

Orientation toggled(Orientation o) {
    return o == Orientation::kObverse ? Orientation::kReverse : Orientation::kObverse;
}

template <typename Map>
LmfhPattern remap(const LmfhPattern& in, Map map, Orientation orientation) {
    LmfhPattern out{in.P, {}, orientation};
    out.points.reserve(in.points.size());
    for (const auto& pt : in.points) out.points.push_back(map(pt));
    std::sort(out.points.begin(), out.points.end(),
              [](const PatternPoint& a, const PatternPoint& b) { return a.t < b.t; });
    return out;
}

const PatternPoint& point_at(const LmfhPattern& pattern, std::int64_t t) {
    const auto it = std::find_if(pattern.points.begin(), pattern.points.end(),
                                 [t](const PatternPoint& pt) { return pt.t == t; });
    if (it == pattern.points.end()) throw std::invalid_argument("pattern has no point at requested time");
    return *it;
}

}  // namespace

const char* to_string(Orientation orientation) {
    return orientation == Orientation::kObverse ? "obverse" : "reverse";
}

LmfhPattern make_pattern(const Prime& p, std::int64_t slope, std::int64_t fs, std::int64_t ts) {
    const std::int64_t P = p.value();
    const std::int64_t s = mod_reduce(slope, P);
    if (s == 0) throw std::invalid_argument("lmFH slope must be nonzero mod P");
    const std::int64_t offset = mod_reduce(fs, P);

    LmfhPattern pattern{p, {}, Orientation::kObverse};
    pattern.points.reserve(static_cast<std::size_t>(P));
    for (std::int64_t t = 0; t < P; ++t) {
        pattern.points.push_back({t, centered(s * mod_reduce(t + ts, P) + offset, p).value});
    }
    return pattern;
}

LmfhPattern flip_dft(const LmfhPattern& pattern) {
    const Prime& p = pattern.P;
    return remap(
        pattern, [&](const PatternPoint& pt) { return PatternPoint{mod_reduce(pt.f, p.value()), centered(pt.t, p).value}; },
        toggled(pattern.orientation));
}

LmfhPattern flip_idft(const LmfhPattern& pattern) {
    const Prime& p = pattern.P;
    return remap(
        pattern, [&](const PatternPoint& pt) { return PatternPoint{mod_reduce(-pt.f, p.value()), centered(-pt.t, p).value}; },
        toggled(pattern.orientation));
}

LmfhPattern flip_conjugate(const LmfhPattern& pattern) {
    const Prime& p = pattern.P;
    return remap(
        pattern, [&](const PatternPoint& pt) { return PatternPoint{mod_reduce(-pt.t, p.value()), pt.f}; },
        toggled(pattern.orientation));
}

LmfhPattern negate_coordinates(const LmfhPattern& pattern) {
    const Prime& p = pattern.P;
    return remap(
        pattern, [&](const PatternPoint& pt) { return PatternPoint{mod_reduce(-pt.t, p.value()), centered(-pt.f, p).value}; },
        pattern.orientation);
}

std::int64_t read_slope(const LmfhPattern& pattern) {
    const Prime& p = pattern.P;
    const std::int64_t P = p.value();
    if (pattern.points.size() < 2) throw std::domain_error("pattern needs at least two points");

    const PatternPoint& a = pattern.points[0];
    const PatternPoint& b = pattern.points[1];
    const std::int64_t slope = mod_reduce(pattern.points[1].f - a.f, P) * mod_inverse(b.t - a.t, p) % P;
    for (const auto& pt : pattern.points) {
        if (mod_reduce(pt.f - a.f - slope * mod_reduce(pt.t - a.t, P), P) != 0) {
            throw std::domain_error("pattern is not affine mod P");
        }
    }
    return slope;
}

std::int64_t pattern_dft_shift(const LmfhPattern& flipped) {
    const Prime& p = flipped.P;
    // time -(P-1)/2 holds the former most negative frequency; its frequency is
    // the old time index of that point
    const PatternPoint& first = point_at(flipped, mod_reduce(-p.half(), p.value()));
    return mod_reduce(first.f - p.half(), p.value());
}

std::int64_t pattern_idft_shift(const LmfhPattern& flipped) {
    const Prime& p = flipped.P;
    // flip_idft negates the old time, so Fs = -(t_old - (P-1)/2) = f + (P-1)/2
    const PatternPoint& first = point_at(flipped, mod_reduce(-p.half(), p.value()));
    return mod_reduce(first.f + p.half(), p.value());
}

std::string export_pattern(const LmfhPattern& pattern) {
    std::ostringstream os;
    os << "t,f,orientation\n";
    for (const auto& pt : pattern.points) os << pt.t << ',' << pt.f << ',' << to_string(pattern.orientation) << '\n';
    return os.str();
}

}  // namespace zcfast
