#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "zcfast/pattern.hpp"
#include "zcfast/transform.hpp"

using namespace zcfast;

namespace {

bool contains(const LmfhPattern& p, std::int64_t t, std::int64_t f) {
    return std::find(p.points.begin(), p.points.end(), PatternPoint{t, f}) != p.points.end();
}

}  // namespace

TEST_CASE("make_pattern reproduces the P=13, slope -3 line") {
    const auto pat = make_pattern(Prime(13), -3);
    CHECK(pat.orientation == Orientation::kObverse);
    CHECK(contains(pat, 0, 0));
    CHECK(contains(pat, 1, -3));
    CHECK(contains(pat, 2, -6));
    CHECK(contains(pat, 3, 4));

    std::vector<std::int64_t> fs;
    for (const auto& pt : pat.points) fs.push_back(pt.f);
    std::sort(fs.begin(), fs.end());
    for (std::int64_t i = 0; i < 13; ++i) CHECK(fs[static_cast<std::size_t>(i)] == i - 6);

    CHECK_THROWS_AS(make_pattern(Prime(13), 0), std::invalid_argument);
}

TEST_CASE("cyclic time shift rotates the pattern in t") {
    const Prime p(13);
    const auto base = make_pattern(p, -3);
    const auto shifted = make_pattern(p, -3, 0, 2);
    for (const auto& pt : shifted.points) CHECK(contains(base, (pt.t + 2) % 13, pt.f));
}

TEST_CASE("flip_dft") {
    const Prime p(13);
    const auto pat = make_pattern(p, -3);
    const auto d = flip_dft(pat);
    CHECK(d.orientation == Orientation::kReverse);
    CHECK(read_slope(d) == 4);  // -3^-1 = -9 = 4 mod 13
    CHECK(flip_dft(d) == pat);
    // the former most negative frequency (-6 at t = 2) sits at time -6 = 7
    CHECK(contains(d, 7, 2));
    CHECK(pattern_dft_shift(d) == 9);
    CHECK(centered(pattern_dft_shift(d), p).value == -4);
}

TEST_CASE("flip_idft") {
    const Prime p(13);
    const auto pat = make_pattern(p, -3);
    const auto i = flip_idft(pat);
    CHECK(i.orientation == Orientation::kReverse);
    CHECK(read_slope(i) == 4);
    CHECK(flip_idft(i) == pat);
    CHECK(pattern_idft_shift(i) == 8);
    CHECK(mod_reduce(pattern_dft_shift(flip_dft(pat)) - pattern_idft_shift(i), 13) == 1);
    CHECK(i == negate_coordinates(flip_dft(pat)));
}

TEST_CASE("flip_conjugate") {
    const auto pat = make_pattern(Prime(13), -3);
    const auto obverse = flip_conjugate(flip_dft(pat));
    CHECK(obverse.orientation == Orientation::kObverse);
    CHECK(read_slope(obverse) == 9);  // +u^-1
    CHECK(contains(obverse, 0, 0));
    CHECK(flip_conjugate(obverse) == flip_dft(pat));
}

TEST_CASE("read_slope") {
    CHECK(read_slope(make_pattern(Prime(13), -3)) == 10);
    CHECK(read_slope(make_pattern(Prime(13), 5, 7, 3)) == 5);

    auto broken = make_pattern(Prime(13), 2);
    std::swap(broken.points[4].f, broken.points[5].f);
    CHECK_THROWS_AS(read_slope(broken), std::domain_error);
}

TEST_CASE("flipping reads off modular inverses for all u, P <= 61") {
    for (std::int64_t P : test::primes_between(3, 61)) {
        const Prime p(P);
        for (std::int64_t s = 1; s < P; ++s) {
            REQUIRE(read_slope(flip_dft(make_pattern(p, s))) == mod_inverse(s, p));
            REQUIRE(read_slope(flip_dft(make_pattern(p, -s))) == mod_reduce(-mod_inverse(s, p), P));
        }
    }
}

TEST_CASE("cyclic time shift becomes a cyclic frequency shift after flip_dft") {
    // z(n) = Z(n + Ts) moves every reverse-side frequency by -Ts, i.e. the
    // obverse spectrum by +Ts.
    for (std::int64_t P : {13, 31}) {
        const Prime p(P);
        for (std::int64_t u = 1; u < P; ++u) {
            for (std::int64_t ts = 0; ts < P; ts += 3) {
                auto expect = flip_dft(make_pattern(p, -u));
                for (auto& pt : expect.points) pt.f = centered(pt.f - ts, p).value;
                REQUIRE(flip_dft(make_pattern(p, -u, 0, ts)) == expect);
                REQUIRE(pattern_dft_shift(flip_dft(make_pattern(p, -u, 0, ts))) ==
                        mod_reduce(pattern_dft_shift(expect), P));
            }
        }
    }
}

TEST_CASE("pattern-extracted shifts are the negated plan shifts") {
    const Prime p(13);
    for (std::int64_t u = 1; u < 13; ++u) {
        const ZcParams params(p, u);
        const auto pat = make_pattern(p, -u);
        const auto fs_dft = TransformPlan(params, Direction::kDft).frequency_shift();
        const auto fs_idft = TransformPlan(params, Direction::kIdft).frequency_shift();
        CHECK(mod_reduce(fs_dft + pattern_dft_shift(flip_dft(pat)), 13) == 0);
        CHECK(mod_reduce(fs_idft + pattern_idft_shift(flip_idft(pat)), 13) == 0);
        const std::int64_t iu = mod_inverse(u, p);
        CHECK(pattern_dft_shift(flip_dft(pat)) == conjugate_form_dft_shift(p, iu));
        CHECK(pattern_idft_shift(flip_idft(pat)) == conjugate_form_idft_shift(p, iu));
    }
}

TEST_CASE("export_pattern") {
    const auto pat = make_pattern(Prime(13), -3);
    const std::string csv = export_pattern(pat);
    CHECK(csv.rfind("t,f,orientation\n0,0,obverse\n1,-3,obverse\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 14);
    CHECK(export_pattern(flip_dft(pat)).find("reverse") != std::string::npos);
    CHECK(export_pattern(flip_dft(pat)).find("obverse") == std::string::npos);
}
