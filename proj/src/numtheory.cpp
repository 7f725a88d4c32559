#include "zcfast/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace zcfast {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Prime::Prime(std::int64_t value) : value_(value) {
    if (value < 3 || value > kMaxPrime || !is_prime(value)) {
        throw std::invalid_argument("not an odd prime in [3, 2^31]: " + std::to_string(value));
    }
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, const Prime& p) {
    const std::int64_t m = p.value();
    std::int64_t result = 1;
    base = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

std::int64_t mod_inverse(std::int64_t a, const Prime& p) {
    const std::int64_t m = p.value();
    std::int64_t r0 = m, r1 = mod_reduce(a, m);
    if (r1 == 0) {
        throw std::domain_error("no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
    }
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    // r0 == gcd == 1 for a prime modulus
    return mod_reduce(s0, m);
}

int legendre(std::int64_t a, const Prime& p) {
    const std::int64_t r = mod_reduce(a, p.value());
    if (r == 0) return 0;
    return mod_pow(r, p.half(), p) == 1 ? 1 : -1;
}

CenteredResidue centered(std::int64_t x, const Prime& p) {
    std::int64_t r = mod_reduce(x, p.value());
    if (r > p.half()) r -= p.value();
    return {r, p.value()};
}

ModTables build_tables(const Prime& p) {
    const std::int64_t n = p.value() - 1;
    ModTables tables{std::vector<std::int64_t>(static_cast<std::size_t>(n)),
                     std::vector<int>(static_cast<std::size_t>(n))};
#pragma omp parallel for schedule(static) if (n > 4096)
    for (std::int64_t u = 1; u <= n; ++u) {
        tables.inverses[static_cast<std::size_t>(u - 1)] = mod_inverse(u, p);
        tables.legendre2u[static_cast<std::size_t>(u - 1)] = legendre(2 * u, p);
    }
    return tables;
}

}  // namespace zcfast
