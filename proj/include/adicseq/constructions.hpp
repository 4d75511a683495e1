#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adicseq/bitseq.hpp"
#include "adicseq/gf2k.hpp"
#include "adicseq/numtheory.hpp"

namespace adicseq {

// ---------------------------------------------------------------------------
// Modified two-prime sequence: period p(p+2) for twin primes (p, p+2).
// ---------------------------------------------------------------------------

struct TwoPrimeParams {
    std::uint64_t p;

    void validate() const {
        if (p < 3 || !is_prime(p) || !is_prime(p + 2))
            throw std::invalid_argument("p and p+2 must both be prime");
    }
};

// s_B(i) = 1 if i = 0 mod p+2; 1 if i = 0 mod p and i != 0;
// otherwise (1 - (i/p)(i/(p+2))) / 2. Note i = 0 hits the first clause.
inline BitSequence build_two_prime_modified(const TwoPrimeParams& params) {
    params.validate();
    const std::uint64_t p = params.p;
    const std::uint64_t q = p + 2;
    const std::uint64_t n = p * q;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint8_t b;
        if (i % q == 0)
            b = 1;
        else if (i % p == 0)
            b = 1;
        else
            b = static_cast<std::uint8_t>(
                (1 - legendre(static_cast<long long>(i), p) * legendre(static_cast<long long>(i), q)) / 2);
        bits[static_cast<std::size_t>(i)] = b;
    }
    return BitSequence(std::move(bits));
}

// ---------------------------------------------------------------------------
// Modified generalized GMW sequence: period 2^{2k} - 1.
// ---------------------------------------------------------------------------

// Structure of an interleaved sequence: one constant column, every other
// column a cyclic shift of a single base sequence.
struct InterleavedDecomposition {
    std::size_t constant_column = 0;
    std::uint8_t constant_value = 0;
    BitSequence base;                // first non-constant column
    std::vector<long long> shifts;   // per column; -1 marks the constant column
};

inline bool is_constant(const BitSequence& s) {
    for (std::size_t i = 1; i < s.period(); ++i)
        if (s[i] != s[0]) return false;
    return true;
}

// Returns the shift t with cyclic_shift(base, t) == col, if any.
inline std::optional<long long> find_shift(const BitSequence& base, const BitSequence& col) {
    const std::size_t n = base.period();
    if (col.period() != n) return std::nullopt;
    for (std::size_t t = 0; t < n; ++t) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = col[i] == base.at_cyclic(static_cast<long long>(i + t));
        if (ok) return static_cast<long long>(t);
    }
    return std::nullopt;
}

// Splits u into t_columns columns and checks the GMW interleaving shape:
// exactly one constant column, all others cyclic shifts of one base.
inline InterleavedDecomposition decompose_interleaved(const BitSequence& u, std::size_t t_columns) {
    std::vector<BitSequence> cols = deinterleave(u, t_columns);
    std::size_t const_idx = t_columns;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!is_constant(cols[j])) continue;
        if (const_idx != t_columns) throw std::invalid_argument("input is not GMW-decomposable");
        const_idx = j;
    }
    if (const_idx == t_columns) throw std::invalid_argument("input is not GMW-decomposable");

    std::size_t base_idx = const_idx == 0 ? 1 : 0;
    if (base_idx >= cols.size()) throw std::invalid_argument("input is not GMW-decomposable");
    InterleavedDecomposition d{const_idx, cols[const_idx][0], cols[base_idx], {}};
    d.shifts.resize(cols.size(), -1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j == const_idx) continue;
        const std::optional<long long> t = find_shift(d.base, cols[j]);
        if (!t) throw std::invalid_argument("input is not GMW-decomposable");
        d.shifts[j] = *t;
    }
    return d;
}

inline bool has_two_level_autocorrelation(const BitSequence& s) {
    const AutocorrSpectrum sp = autocorrelation_spectrum(s);
    for (std::size_t tau = 1; tau < sp.period; ++tau)
        if (sp.values[tau] != -1) return false;
    return true;
}

enum class GmwBase { trace_m_sequence, user_supplied };

struct GmwParams {
    unsigned k = 2;
    std::optional<std::uint32_t> long_modulus;  // degree-2k; defaults to the table entry
    GmwBase base_choice = GmwBase::trace_m_sequence;
    std::optional<BitSequence> base;   // user_supplied: 2-level sequence of period 2^k - 1
    std::vector<long long> shifts;     // user_supplied: shift of each a_i, 2^k entries

    void validate() const {
        if (k < 2 || k > 8) throw std::invalid_argument("GmwParams: k must be in [2,8]");
        if (base_choice == GmwBase::user_supplied) {
            const std::size_t period = (std::size_t(1) << k) - 1;
            if (!base || base->period() != period)
                throw std::invalid_argument("GmwParams: base must have period 2^k - 1");
            if (shifts.size() != (std::size_t(1) << k))
                throw std::invalid_argument("GmwParams: need 2^k shifts");
        }
    }
};

struct GmwProvenance {
    std::uint32_t long_modulus = 0;  // 0 on the user-supplied path
    std::size_t constant_column = 0;  // column replaced by (or holding) the all-one column
    BitSequence base;
    std::vector<long long> shifts;  // per column; -1 marks the all-one column
};

struct GmwResult {
    BitSequence sequence;
    GmwProvenance provenance;
};

// Default path: build the long trace m-sequence over GF(2^{2k}), deinterleave
// into 2^k + 1 columns, replace the unique constant-zero column with the
// all-one column, re-interleave. The decomposition facts (one constant column,
// shifts of one 2-level base) are asserted, not assumed.
//
// User-supplied path: interleave the all-one column followed by the given
// shifts of the given base directly; the base must pass a 2-level check.
inline GmwResult build_gmw_modified(const GmwParams& params) {
    params.validate();
    const std::size_t base_period = (std::size_t(1) << params.k) - 1;
    const std::size_t t_columns = (std::size_t(1) << params.k) + 1;

    if (params.base_choice == GmwBase::user_supplied) {
        if (!has_two_level_autocorrelation(*params.base))
            throw std::invalid_argument("GmwParams: base sequence is not 2-level");
        std::vector<BitSequence> cols;
        cols.reserve(t_columns);
        cols.push_back(BitSequence::ones(base_period));
        for (long long t : params.shifts) cols.push_back(cyclic_shift(*params.base, t));
        GmwProvenance prov{0, 0, *params.base, {}};
        prov.shifts.push_back(-1);
        prov.shifts.insert(prov.shifts.end(), params.shifts.begin(), params.shifts.end());
        return GmwResult{interleave(cols), std::move(prov)};
    }

    const std::uint32_t modulus =
        params.long_modulus ? *params.long_modulus : Gf2kField::default_modulus(2 * params.k);
    const Gf2kField field(2 * params.k, modulus);
    const BitSequence u = trace_m_sequence(field);
    InterleavedDecomposition d = decompose_interleaved(u, t_columns);
    if (d.constant_value != 0) throw std::invalid_argument("input is not GMW-decomposable");
    if (!has_two_level_autocorrelation(d.base))
        throw std::invalid_argument("input is not GMW-decomposable");

    std::vector<BitSequence> cols = deinterleave(u, t_columns);
    cols[d.constant_column] = BitSequence::ones(base_period);
    GmwProvenance prov{modulus, d.constant_column, std::move(d.base), std::move(d.shifts)};
    return GmwResult{interleave(cols), std::move(prov)};
}

// Rebuilds the sequence from its provenance record; used to cross-check that
// the record is faithful.
inline BitSequence reconstruct_from_provenance(const GmwProvenance& prov) {
    std::vector<BitSequence> cols;
    cols.reserve(prov.shifts.size());
    for (long long t : prov.shifts) {
        if (t < 0)
            cols.push_back(BitSequence::ones(prov.base.period()));
        else
            cols.push_back(cyclic_shift(prov.base, t));
    }
    return interleave(cols);
}

}  // namespace adicseq
