#include <doctest.h>

#include <chrono>
#include <sstream>

#include "zcfast/verify.hpp"

using namespace zcfast;

TEST_CASE("odd_primes_up_to") {
    CHECK(odd_primes_up_to(13) == std::vector<std::int64_t>{3, 5, 7, 11, 13});
    CHECK(odd_primes_up_to(199).size() == 45);
    CHECK(odd_primes_up_to(2).empty());
}

TEST_CASE("verification at pmax=61 passes quickly and covers every property family") {
    const auto start = std::chrono::steady_clock::now();
    const auto report = run_verification({61, false, 0});
    const auto elapsed = std::chrono::steady_clock::now() - start;

    std::ostringstream os;
    report.print(os);
    INFO(os.str());
    CHECK(report.all_passed());
    CHECK(report.properties.size() >= 12);
    CHECK(elapsed < std::chrono::seconds(10));
    for (const auto& p : report.properties) CHECK(p.cases > 0);
}

TEST_CASE("an off-by-one frequency shift is caught") {
    const auto report = run_verification({13, false, 1});
    CHECK_FALSE(report.all_passed());
    for (const auto& p : report.properties) {
        if (p.name == "transform.fast_dft_vs_naive" || p.name == "transform.fast_idft_vs_naive" ||
            p.name == "transform.round_trip") {
            CHECK_FALSE(p.passed);
        }
    }
}
