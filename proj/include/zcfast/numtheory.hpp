// Exact modular arithmetic over odd prime moduli.
//
// Everything here works in 64-bit signed integers. Moduli are capped at 2^31
// so that the product of two reduced residues never overflows.

#pragma once

#include <cstdint>
#include <vector>

namespace zcfast {

/// Largest accepted prime modulus.
inline constexpr std::int64_t kMaxPrime = std::int64_t{1} << 31;

bool is_prime(std::int64_t n);

/// An odd prime in [3, 2^31]. Construction throws std::invalid_argument
/// for anything else.
class Prime {
public:
    explicit Prime(std::int64_t value);

    std::int64_t value() const noexcept { return value_; }
    std::int64_t half() const noexcept { return (value_ - 1) / 2; }  // (P-1)/2
    std::int64_t inverse_of_two() const noexcept { return (value_ + 1) / 2; }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::int64_t value_;
};

/// Representative of x mod P in [-(P-1)/2, (P-1)/2].
struct CenteredResidue {
    std::int64_t value;
    std::int64_t modulus;

    friend bool operator==(const CenteredResidue&, const CenteredResidue&) = default;
};

/// x mod P in [0, P-1], for any sign of x.
inline std::int64_t mod_reduce(std::int64_t x, std::int64_t p) noexcept {
    std::int64_t r = x % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, const Prime& p);

/// Extended Euclid. Throws std::domain_error when a ≡ 0 (mod P).
std::int64_t mod_inverse(std::int64_t a, const Prime& p);

/// Legendre symbol (a/P) via Euler's criterion.
int legendre(std::int64_t a, const Prime& p);

CenteredResidue centered(std::int64_t x, const Prime& p);

/// Per-root lookup tables; entry u-1 belongs to root u.
struct ModTables {
    std::vector<std::int64_t> inverses;
    std::vector<int> legendre2u;
};

ModTables build_tables(const Prime& p);

}  // namespace zcfast
