#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "adicseq/bigint.hpp"
#include "adicseq/bitseq.hpp"
#include "adicseq/constructions.hpp"

namespace adicseq {

// ---------------------------------------------------------------------------
// 2-adic complexity profile
// ---------------------------------------------------------------------------

// Exact profile of one sequence: S(2), gcd against 2^N - 1, the reduced
// denominator qmin, and phi2 = log2(qmin). phi2 is carried three ways (exact
// qmin, its bit length, a double log2) because equality claims such as
// "phi2 = log2(2^N - 1)" are asserted on qmin, never on floats.
struct AdicProfile {
    std::size_t period = 0;
    BigInt s2;
    BigInt modulus;  // 2^N - 1
    BigInt g;        // gcd(modulus, s2)
    BigInt qmin;     // modulus / g
    std::size_t qmin_bits = 0;
    double phi2 = 0.0;
};

// S(2) = sum s_i 2^i, an exact integer in [0, 2^N).
inline BigInt s_of_2(const BitSequence& s) {
    BigInt r = 0;
    for (std::size_t i = 0; i < s.period(); ++i)
        if (s[i]) boost::multiprecision::bit_set(r, static_cast<unsigned>(i));
    return r;
}

// T(2^{-1}) mod (2^N - 1) with 2^{-1} = 2^{N-1}; the exponent of term i
// reduces to (N - i) mod N. Degenerate modulus 2^1 - 1 = 1 gives 0.
inline BigInt t_of_half_mod(const BitSequence& s) {
    const std::size_t n = s.period();
    const BigInt m = pow2m1(n);
    if (m == 1) return 0;
    BigInt pos = 0, neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned e = static_cast<unsigned>(i == 0 ? 0 : n - i);
        boost::multiprecision::bit_set(s[i] ? neg : pos, e);
    }
    return mod_reduce(pos - neg, m);
}

inline AdicProfile two_adic_profile(const BitSequence& s) {
    AdicProfile p;
    p.period = s.period();
    p.s2 = s_of_2(s);
    p.modulus = pow2m1(p.period);
    p.g = boost::multiprecision::gcd(p.modulus, p.s2);  // gcd(m, 0) = m covers all-zero s
    p.qmin = p.modulus / p.g;
    p.qmin_bits = bit_length(p.qmin);
    p.phi2 = log2_of(p.qmin);
    return p;
}

// ---------------------------------------------------------------------------
// The correlation identity: -2 S(2) T(2^{-1}) = N + sum_{tau>0} C(tau) 2^tau
// modulo 2^N - 1. Holds for every binary sequence.
// ---------------------------------------------------------------------------

struct CorrelationIdentityReport {
    std::size_t period = 0;
    BigInt lhs;
    BigInt rhs;
    bool holds = false;
};

inline CorrelationIdentityReport lemma3_check(const BitSequence& s) {
    const std::size_t n = s.period();
    const BigInt m = pow2m1(n);
    CorrelationIdentityReport r;
    r.period = n;
    if (m == 1) {  // modulus 1: every congruence holds
        r.lhs = 0;
        r.rhs = 0;
        r.holds = true;
        return r;
    }
    r.lhs = mod_reduce(-2 * s_of_2(s) * t_of_half_mod(s), m);
    const AutocorrSpectrum sp = autocorrelation_spectrum(s);
    BigInt acc = static_cast<long long>(n);
    for (std::size_t tau = 1; tau < n; ++tau)
        acc += BigInt(sp.values[tau]) << static_cast<unsigned>(tau);
    r.rhs = mod_reduce(acc, m);
    r.holds = r.lhs == r.rhs;
    return r;
}

// ---------------------------------------------------------------------------
// Closed forms for the identity's left side on the two families.
// ---------------------------------------------------------------------------

// 2^{2k} - 4 (2^{N_A} - 1)/(2^{2^k+1} - 1), reduced into [0, 2^{N_A} - 1),
// with N_A = 2^{2k} - 1. The division is exact since (2^k + 1) | N_A.
inline BigInt eq1_rhs(unsigned k) {
    if (k < 2) throw std::invalid_argument("eq1_rhs: k must be >= 2");
    const std::size_t n_a = (std::size_t(1) << (2 * k)) - 1;
    const BigInt m = pow2m1(n_a);
    const BigInt den = pow2m1((std::size_t(1) << k) + 1);
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(m, den, quotient, remainder);
    if (remainder != 0) throw std::logic_error("eq1_rhs: division is not exact");
    const BigInt value = (BigInt(1) << (2 * k)) - 4 * quotient;
    return mod_reduce(value, m);
}

// c = p(p+2) - 4 (2^{p(p+2)} - 1)/(2^{p+2} - 1) + 1 as an exact signed
// integer; the division is exact since (p+2) | p(p+2).
inline BigInt c_value(std::uint64_t p) {
    TwoPrimeParams{p}.validate();
    const std::size_t n_b = static_cast<std::size_t>(p * (p + 2));
    const BigInt den = pow2m1(static_cast<std::size_t>(p + 2));
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(pow2m1(n_b), den, quotient, remainder);
    if (remainder != 0) throw std::logic_error("c_value: division is not exact");
    return BigInt(p * (p + 2)) - 4 * quotient + 1;
}

// c reduced into [0, 2^{N_B} - 1).
inline BigInt eq2_rhs(std::uint64_t p) {
    const std::size_t n_b = static_cast<std::size_t>(p * (p + 2));
    return mod_reduce(c_value(p), pow2m1(n_b));
}

// ---------------------------------------------------------------------------
// Claim verification
// ---------------------------------------------------------------------------

// Machine-readable outcome of one claim check at one parameter point.
// Serializes with stable field names; big integers as decimal strings.
struct VerificationReport {
    std::string claim;
    nlohmann::json params;
    std::string expected;
    nlohmann::json measured;
    bool pass = false;

    nlohmann::json to_json() const {
        return nlohmann::json{
            {"claim", claim}, {"params", params}, {"expected", expected},
            {"measured", measured}, {"pass", pass}};
    }
};

// GMW complexity lower bound: phi2 > N_A - 2 - 2(k-1) and phi2 > N_A/2, both
// asserted as exact integer inequalities on qmin, plus the intermediate cap
// g <= (2^{k-1} - 1)^2 that the bound rests on.
inline VerificationReport verify_gmw_bound(unsigned k) {
    if (k < 2 || k > 6) throw std::invalid_argument("verify_gmw_bound: k must be in [2,6]");
    const std::size_t n_a = (std::size_t(1) << (2 * k)) - 1;
    const GmwResult r = build_gmw_modified(GmwParams{.k = k});
    const AdicProfile prof = two_adic_profile(r.sequence);

    const std::size_t bound_exp = n_a - 2 - 2 * (k - 1);
    const BigInt g_cap = (pow2m1(k - 1)) * (pow2m1(k - 1));
    const bool above_bound = prof.qmin > (BigInt(1) << bound_exp);
    const bool above_half = prof.qmin * prof.qmin > (BigInt(1) << n_a);
    const bool g_within_cap = prof.g <= g_cap;

    VerificationReport rep;
    rep.claim = "gmw_bound";
    rep.params = {{"k", k}};
    rep.expected = "qmin > 2^" + std::to_string(bound_exp) + ", qmin^2 > 2^" + std::to_string(n_a) +
                   ", g <= (2^" + std::to_string(k - 1) + " - 1)^2";
    rep.measured = {{"n", n_a},
                    {"g", to_decimal(prof.g)},
                    {"g_cap", to_decimal(g_cap)},
                    {"phi2", prof.phi2},
                    {"qmin_bits", prof.qmin_bits},
                    {"nominal_bound", n_a - 1 - 2 * (k - 1)},
                    {"above_bound", above_bound},
                    {"above_half_period", above_half},
                    {"g_within_cap", g_within_cap}};
    rep.pass = above_bound && above_half && g_within_cap;
    return rep;
}

// Two-prime exactness: gcd(2^{N_B} - 1, S(2)) = 1, so qmin = 2^{N_B} - 1 and
// the 2-adic complexity is full.
inline VerificationReport verify_two_prime_exact(std::uint64_t p) {
    const BitSequence s = build_two_prime_modified(TwoPrimeParams{p});
    const AdicProfile prof = two_adic_profile(s);
    const bool g_one = prof.g == 1;
    const bool qmin_full = prof.qmin == prof.modulus;

    VerificationReport rep;
    rep.claim = "twoprime_exact";
    rep.params = {{"p", p}};
    rep.expected = "gcd(2^N - 1, S(2)) = 1 and qmin = 2^N - 1";
    rep.measured = {{"n", prof.period},
                    {"s2", to_decimal(prof.s2)},
                    {"g", to_decimal(prof.g)},
                    {"phi2", prof.phi2},
                    {"qmin_is_modulus", qmin_full}};
    rep.pass = g_one && qmin_full;
    return rep;
}

// gcd(c, 2^p - 1) = gcd(c, 2^{p+2} - 1) = gcd(c, (2^{p(p+2)} - 1)/((2^p - 1)(2^{p+2} - 1))) = 1,
// plus the proof-level reductions gcd((p+1)^2, 2^p - 1) = 1 and
// gcd((p-1)^2, 2^{p+2} - 1) = 1.
inline VerificationReport verify_c_gcd_lemmas(std::uint64_t p) {
    TwoPrimeParams{p}.validate();
    const std::size_t n_b = static_cast<std::size_t>(p * (p + 2));
    const BigInt c_abs = boost::multiprecision::abs(c_value(p));
    const BigInt m_p = pow2m1(static_cast<std::size_t>(p));
    const BigInt m_q = pow2m1(static_cast<std::size_t>(p + 2));
    BigInt cofactor, remainder;
    boost::multiprecision::divide_qr(pow2m1(n_b), m_p * m_q, cofactor, remainder);
    if (remainder != 0) throw std::logic_error("verify_c_gcd_lemmas: cofactor division is not exact");

    const BigInt g1 = boost::multiprecision::gcd(c_abs, m_p);
    const BigInt g2 = boost::multiprecision::gcd(c_abs, m_q);
    const BigInt g3 = boost::multiprecision::gcd(c_abs, cofactor);
    const BigInt gp1 = boost::multiprecision::gcd(BigInt((p + 1) * (p + 1)), m_p);
    const BigInt gp2 = boost::multiprecision::gcd(BigInt((p - 1) * (p - 1)), m_q);

    VerificationReport rep;
    rep.claim = "c_gcd";
    rep.params = {{"p", p}};
    rep.expected = "all three c-gcds and both proof-level gcds equal 1";
    rep.measured = {{"gcd_c_2p", to_decimal(g1)},
                    {"gcd_c_2q", to_decimal(g2)},
                    {"gcd_c_cofactor", to_decimal(g3)},
                    {"gcd_p1sq_2p", to_decimal(gp1)},
                    {"gcd_m1sq_2q", to_decimal(gp2)}};
    rep.pass = g1 == 1 && g2 == 1 && g3 == 1 && gp1 == 1 && gp2 == 1;
    return rep;
}

}  // namespace adicseq
