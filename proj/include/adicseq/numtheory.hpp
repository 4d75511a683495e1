#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adicseq/bigint.hpp"

namespace adicseq {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Ascending (p, p+2) with both prime and p <= limit.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_prime_pairs(std::uint64_t limit) {
    if (limit < 3) throw std::invalid_argument("twin_prime_pairs: limit must be >= 3");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t p = 3; p <= limit; p += 2)
        if (is_prime(p) && is_prime(p + 2)) pairs.emplace_back(p, p + 2);
    return pairs;
}

// Legendre symbol (a/q) via Euler's criterion: a^{(q-1)/2} mod q.
inline int legendre(long long a, std::uint64_t q) {
    if (q < 3 || !is_prime(q)) throw std::invalid_argument("legendre: q must be an odd prime");
    long long r = a % static_cast<long long>(q);
    if (r < 0) r += static_cast<long long>(q);
    if (r == 0) return 0;
    const std::uint64_t e = powmod_u64(static_cast<std::uint64_t>(r), (q - 1) / 2, q);
    return e == 1 ? 1 : -1;
}

// Partial factorization by trial division up to `bound`; display-only
// decoration for reports (nothing downstream depends on completeness).
struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> factors;
    BigInt cofactor = 1;  // > 1 when trial division did not finish the job
    bool complete = true;

    std::string to_string() const {
        if (factors.empty() && cofactor == 1) return "1";
        std::string s;
        for (const auto& [p, e] : factors) {
            if (!s.empty()) s += "*";
            s += to_decimal(p);
            if (e > 1) s += "^" + std::to_string(e);
        }
        if (cofactor != 1) {
            if (!s.empty()) s += "*";
            s += to_decimal(cofactor);
        }
        return s;
    }
};

inline Factorization trial_factor(BigInt n, std::uint64_t bound = 1000000) {
    if (n < 0) n = -n;
    Factorization f;
    if (n <= 1) return f;
    bool sieved_to_sqrt = false;
    for (std::uint64_t p = 2; p <= bound; p = (p == 2 ? 3 : p + 2)) {
        if (BigInt(p) * p > n) {
            sieved_to_sqrt = true;
            break;
        }
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.factors.emplace_back(p, e);
    }
    if (n > 1) {
        if (sieved_to_sqrt) {
            f.factors.emplace_back(n, 1);  // no divisor <= sqrt(n), so n is prime
        } else {
            f.cofactor = n;
            f.complete = false;
        }
    }
    return f;
}

}  // namespace adicseq
