#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace adicseq {

using BigInt = boost::multiprecision::cpp_int;

// 2^n - 1
inline BigInt pow2m1(std::size_t n) { return (BigInt(1) << n) - 1; }

// Bit length: 0 for 0, otherwise floor(log2 |x|) + 1.
inline std::size_t bit_length(const BigInt& x) {
    if (x == 0) return 0;
    const BigInt a = boost::multiprecision::abs(x);
    return boost::multiprecision::msb(a) + 1;
}

// log2 of a positive integer, accurate to double precision at any size.
inline double log2_of(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log2_of: argument must be positive");
    const std::size_t b = boost::multiprecision::msb(x);
    if (b <= 52) return std::log2(x.convert_to<double>());
    const BigInt top = x >> (b - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(b - 52);
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// Least nonnegative residue of x mod m, m > 0.
inline BigInt mod_reduce(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace adicseq
