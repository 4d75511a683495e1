#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adicseq/adic.hpp"
#include "adicseq/bigint.hpp"
#include "adicseq/bitseq.hpp"

namespace adicseq {

// Rational f/q with q odd whose 2-adic expansion matches a given bit prefix.
// Canonical form: q > 0, gcd(|f|, q) = 1, sign carried by f.
// phi_measure = log2(max(|f|, |q|)).
struct RationalApprox {
    BigInt f;
    BigInt q;
    double phi_measure = 0.0;
};

// First nbits coefficients of the 2-adic expansion of f/q (q odd): repeatedly
// take the numerator's low bit and divide the remainder by 2.
inline std::vector<std::uint8_t> expand(const BigInt& f, const BigInt& q, std::size_t nbits) {
    if (q % 2 == 0) throw std::invalid_argument("expand: q must be odd");
    if (nbits == 0) throw std::invalid_argument("expand: nbits must be >= 1");
    std::vector<std::uint8_t> bits(nbits);
    BigInt num = f;
    for (std::size_t i = 0; i < nbits; ++i) {
        const bool b = num % 2 != 0;
        bits[i] = b ? 1 : 0;
        if (b) num -= q;
        num /= 2;  // exact: num is even here
    }
    return bits;
}

namespace detail {

// Lattice machinery for 2-adic rational approximation. After k bits the
// candidate pairs live in L_k = {(u, v) : u = v*alpha mod 2^k}; d caches
// u - v*alpha so membership in L_{k+1} is a single bit test.
struct ApproxVec {
    BigInt u, v, d;
};

inline BigInt vec_measure(const ApproxVec& x) {
    const BigInt au = boost::multiprecision::abs(x.u);
    const BigInt av = boost::multiprecision::abs(x.v);
    return au > av ? au : av;
}

inline ApproxVec vec_add_scaled(const ApproxVec& a, const BigInt& c, const ApproxVec& b) {
    return ApproxVec{a.u + c * b.u, a.v + c * b.v, a.d + c * b.d};
}

inline ApproxVec vec_double(const ApproxVec& a) { return ApproxVec{2 * a.u, 2 * a.v, 2 * a.d}; }

// max(|u2 - t*u1|, |v2 - t*v1|) as a function of integer t.
inline BigInt offset_measure(const ApproxVec& b2, const ApproxVec& b1, const BigInt& t) {
    const BigInt au = boost::multiprecision::abs(b2.u - t * b1.u);
    const BigInt av = boost::multiprecision::abs(b2.v - t * b1.v);
    return au > av ? au : av;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// argmin over integer t of the convex piecewise-linear offset_measure; the
// minimum sits at (the integer neighbours of) a breakpoint.
inline BigInt best_offset(const ApproxVec& b2, const ApproxVec& b1) {
    std::vector<BigInt> candidates{0};
    auto add_ratio = [&](const BigInt& num, const BigInt& den) {
        if (den == 0) return;
        const BigInt f = floor_div(num, den);
        candidates.push_back(f);
        candidates.push_back(f + 1);
    };
    add_ratio(b2.u, b1.u);
    add_ratio(b2.v, b1.v);
    add_ratio(b2.u - b2.v, b1.u - b1.v);
    add_ratio(b2.u + b2.v, b1.u + b1.v);
    BigInt best_t = 0;
    BigInt best = offset_measure(b2, b1, best_t);
    for (const BigInt& t : candidates) {
        const BigInt m = offset_measure(b2, b1, t);
        if (m < best) {
            best = m;
            best_t = t;
        }
    }
    return best_t;
}

// Gaussian (Minkowski) reduction in the max norm: on exit b1 is a shortest
// lattice vector and b2 attains the second successive minimum.
inline void gauss_reduce(ApproxVec& b1, ApproxVec& b2) {
    if (vec_measure(b2) < vec_measure(b1)) std::swap(b1, b2);
    for (;;) {
        const BigInt t = best_offset(b2, b1);
        if (t != 0) {
            const ApproxVec reduced = vec_add_scaled(b2, -t, b1);
            if (vec_measure(reduced) < vec_measure(b2)) b2 = reduced;
        }
        if (vec_measure(b2) >= vec_measure(b1)) return;
        std::swap(b1, b2);
    }
}

}  // namespace detail

// Synthesizes a rational f/q, q odd, whose 2-adic expansion reproduces the
// prefix, of minimal phi-measure. Walks the chain of approximation lattices
// L_1 ⊃ L_2 ⊃ ..., keeping a reduced basis; each new bit halves the lattice
// and the failing basis vector is repaired with the surviving one.
inline RationalApprox approximate(const std::vector<std::uint8_t>& prefix) {
    using detail::ApproxVec;
    const std::size_t len = prefix.size();
    if (len == 0) throw std::invalid_argument("approximate: prefix must be non-empty");

    BigInt alpha = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (prefix[i] > 1) throw std::invalid_argument("approximate: prefix bits must be 0 or 1");
        if (prefix[i]) boost::multiprecision::bit_set(alpha, static_cast<unsigned>(i));
    }

    ApproxVec b1{1, 0, 1};            // d = u - v*alpha
    ApproxVec b2{0, 1, -alpha};
    for (std::size_t k = 0; k < len; ++k) {
        const BigInt a1 = boost::multiprecision::abs(b1.d);
        const BigInt a2 = boost::multiprecision::abs(b2.d);
        const bool in1 = !boost::multiprecision::bit_test(a1, static_cast<unsigned>(k));
        const bool in2 = !boost::multiprecision::bit_test(a2, static_cast<unsigned>(k));
        if (in1 && in2) throw std::logic_error("approximate: lattice index invariant broken");
        if (in1) {
            b2 = detail::vec_double(b2);
        } else if (in2) {
            std::swap(b1, b2);
            b2 = detail::vec_double(b2);
        } else {
            const ApproxVec sum = detail::vec_add_scaled(b1, 1, b2);
            b2 = detail::vec_double(vec_measure(b1) <= vec_measure(b2) ? b1 : b2);
            b1 = sum;
        }
        detail::gauss_reduce(b1, b2);
    }

    // The shortest vector wins if its denominator is odd; otherwise every
    // valid pair has an odd coefficient on b2, so the second minimum b2 is
    // optimal among odd-denominator pairs.
    const bool b1_odd = boost::multiprecision::bit_test(boost::multiprecision::abs(b1.v), 0);
    ApproxVec pick = b1_odd ? b1 : b2;
    if (!boost::multiprecision::bit_test(boost::multiprecision::abs(pick.v), 0))
        throw std::logic_error("approximate: no odd-denominator basis vector");

    BigInt f = pick.u, q = pick.v;
    if (q < 0) {
        f = -f;
        q = -q;
    }
    const BigInt d = boost::multiprecision::gcd(boost::multiprecision::abs(f), q);
    if (d > 1) {
        f /= d;
        q /= d;
    }
    if (expand(f, q, len) != prefix) throw std::logic_error("approximate: synthesized pair fails re-expansion");

    const BigInt af = boost::multiprecision::abs(f);
    RationalApprox out{f, q, 0.0};
    out.phi_measure = log2_of(af > q ? af : q);
    return out;
}

namespace detail {
inline RationalApprox make_canonical(long long f, long long q) {
    long long af = f < 0 ? -f : f;
    const long long d = std::gcd(af, q);
    if (d > 1) {
        f /= d;
        q /= d;
        af /= d;
    }
    RationalApprox out{f, q, 0.0};
    out.phi_measure = log2_of(BigInt(af > q ? af : q));
    return out;
}
}  // namespace detail

// Exhaustive minimal-measure search; test oracle only. Returns nullopt when
// no pair within the bound matches.
inline std::optional<RationalApprox> minimal_by_bruteforce(const std::vector<std::uint8_t>& prefix,
                                                           long long bound) {
    const std::size_t len = prefix.size();
    if (len == 0 || len > 24) throw std::invalid_argument("minimal_by_bruteforce: prefix length must be in [1,24]");
    if (bound < 1 || bound > 512) throw std::invalid_argument("minimal_by_bruteforce: bound must be in [1,512]");

    const auto matches = [&](long long f, long long q) {
        long long num = f;
        for (std::size_t i = 0; i < len; ++i) {
            const bool bit = (num & 1) != 0;
            if (bit != (prefix[i] != 0)) return false;
            if (bit) num -= q;
            num /= 2;
        }
        return true;
    };

    // Sweep by increasing measure so the first hit is minimal.
    for (long long m = 1; m <= bound; ++m) {
        // q = m (odd), |f| <= m
        if (m % 2 == 1)
            for (long long f = -m; f <= m; ++f)
                if (matches(f, m)) return detail::make_canonical(f, m);
        // |f| = m, odd q < m
        for (long long q = 1; q < m; q += 2) {
            if (matches(m, q)) return detail::make_canonical(m, q);
            if (matches(-m, q)) return detail::make_canonical(-m, q);
        }
    }
    return std::nullopt;
}

// required_prefix_bits pairs the profile with the 2m+2 recovery threshold of
// the rational approximation attack.
struct SecurityMargin {
    double phi2 = 0.0;
    double required_prefix_bits = 0.0;
    double fraction_of_period = 0.0;
};

inline SecurityMargin security_margin(const BitSequence& s) {
    const AdicProfile prof = two_adic_profile(s);
    SecurityMargin m;
    m.phi2 = prof.phi2;
    m.required_prefix_bits = 2.0 * prof.phi2 + 2.0;
    m.fraction_of_period = m.required_prefix_bits / static_cast<double>(s.period());
    return m;
}

}  // namespace adicseq
