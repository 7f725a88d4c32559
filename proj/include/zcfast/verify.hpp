// Self-check suite behind `zcfast verify`: every module invariant, swept over
// all odd primes up to a bound.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zcfast {

struct VerifyOptions {
    std::int64_t pmax = 199;
    bool include_839 = false;
    // Mutation check: moves every fast-path plan's Fs by this many bins.
    std::int64_t fs_fault = 0;
};

struct PropertyResult {
    std::string name;
    bool passed = true;
    double max_error = 0.0;  // normalized by the property's tolerance scale
    double tolerance = 0.0;
    std::int64_t cases = 0;
};

struct VerifyReport {
    std::vector<PropertyResult> properties;

    bool all_passed() const;
    void print(std::ostream& os) const;
};

/// Odd primes in [3, pmax].
std::vector<std::int64_t> odd_primes_up_to(std::int64_t pmax);

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace zcfast
