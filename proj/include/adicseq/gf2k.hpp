#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "adicseq/bitseq.hpp"

namespace adicseq {

// GF(2^k) as polynomial residues modulo a primitive polynomial. Elements are
// k-bit vectors; the modulus bit-vector includes the leading x^k term. The
// constructor verifies primitivity by checking that the residue class of x
// has multiplicative order exactly 2^k - 1, which also rules out reducible
// moduli. Immutable after construction.
class Gf2kField {
public:
    Gf2kField(unsigned degree, std::uint32_t modulus) : k_(degree), mod_(modulus) {
        if (degree < 2 || degree > 16) throw std::invalid_argument("Gf2kField: degree must be in [2,16]");
        if ((modulus >> degree) != 1u) throw std::invalid_argument("Gf2kField: modulus must have degree k");
        if ((modulus & 1u) == 0u) throw std::invalid_argument("Gf2kField: modulus must have nonzero constant term");
        verify_primitive();
    }

    static std::uint32_t default_modulus(unsigned degree) {
        // Lexicographically least primitive polynomial per degree.
        static constexpr std::uint32_t table[17] = {
            0,      0,      0x7,    0xb,    0x13,   0x25,   0x43,   0x83,  0x11d,
            0x211,  0x409,  0x805,  0x1053, 0x201b, 0x402b, 0x8003, 0x1002d};
        if (degree < 2 || degree > 16) throw std::invalid_argument("Gf2kField: no default modulus for this degree");
        return table[degree];
    }

    static Gf2kField with_default_modulus(unsigned degree) {
        return Gf2kField(degree, default_modulus(degree));
    }

    unsigned degree() const { return k_; }
    std::uint32_t modulus() const { return mod_; }
    std::uint64_t order() const { return (std::uint64_t(1) << k_) - 1; }  // of the unit group

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0;
        while (b) {
            if (b & 1u) r ^= a;
            b >>= 1;
            a <<= 1;
            if ((a >> k_) & 1u) a ^= mod_;
        }
        return r;
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Absolute trace Tr(z) = z + z^2 + z^4 + ... + z^{2^{k-1}}, reduced to GF(2).
    std::uint8_t trace(std::uint32_t z) const {
        std::uint32_t t = 0;
        for (unsigned i = 0; i < k_; ++i) {
            t ^= z;
            z = mul(z, z);
        }
        if (t > 1) throw std::logic_error("Gf2kField: trace left the prime field");
        return static_cast<std::uint8_t>(t);
    }

private:
    void verify_primitive() const {
        const std::uint64_t n = order();
        if (pow(2, n) != 1) throw std::invalid_argument("Gf2kField: modulus is not primitive");
        std::uint64_t m = n;
        for (std::uint64_t f = 2; f * f <= m; ++f) {
            if (m % f) continue;
            if (pow(2, n / f) == 1) throw std::invalid_argument("Gf2kField: modulus is not primitive");
            while (m % f == 0) m /= f;
        }
        if (m > 1 && m < n && pow(2, n / m) == 1)
            throw std::invalid_argument("Gf2kField: modulus is not primitive");
    }

    unsigned k_;
    std::uint32_t mod_;
};

// s_i = Tr(alpha^i) with alpha the residue of x; period 2^k - 1, phase s_0 = Tr(1).
// Has 2-level autocorrelation: C(tau) = -1 for every tau != 0.
inline BitSequence trace_m_sequence(const Gf2kField& field) {
    const std::uint64_t n = field.order();
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    std::uint32_t power = 1;  // alpha^0
    for (std::uint64_t i = 0; i < n; ++i) {
        bits[static_cast<std::size_t>(i)] = field.trace(power);
        power = field.mul(power, 2);
    }
    return BitSequence(std::move(bits));
}

}  // namespace adicseq
