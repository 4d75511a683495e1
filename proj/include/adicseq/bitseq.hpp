#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adicseq {

// One period of a binary sequence. Values are immutable after construction;
// every operation below is a pure function, so sequences can be shared freely
// across threads. Indexing past the end wraps: s_{i+N} = s_i.
class BitSequence {
public:
    explicit BitSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw std::invalid_argument("BitSequence: period must be >= 1");
        for (std::uint8_t b : bits_)
            if (b > 1) throw std::invalid_argument("BitSequence: bits must be 0 or 1");
    }

    static BitSequence zeros(std::size_t n) { return BitSequence(std::vector<std::uint8_t>(n, 0)); }
    static BitSequence ones(std::size_t n) { return BitSequence(std::vector<std::uint8_t>(n, 1)); }

    static BitSequence from_string(std::string_view s) {
        std::vector<std::uint8_t> bits;
        bits.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1') throw std::invalid_argument("BitSequence: expected '0'/'1'");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return BitSequence(std::move(bits));
    }

    std::size_t period() const { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

    // Cyclic read at an arbitrary (possibly negative) index.
    std::uint8_t at_cyclic(long long i) const {
        const long long n = static_cast<long long>(period());
        long long r = i % n;
        if (r < 0) r += n;
        return bits_[static_cast<std::size_t>(r)];
    }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::string to_string() const {
        std::string s(period(), '0');
        for (std::size_t i = 0; i < period(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
        return s;
    }

    std::size_t count_ones() const {
        std::size_t c = 0;
        for (std::uint8_t b : bits_) c += b;
        return c;
    }

    bool operator==(const BitSequence&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Full cyclic autocorrelation: values[tau] = C_s(tau).
struct AutocorrSpectrum {
    std::size_t period = 0;
    std::vector<long long> values;
};

namespace detail {
// Doubled (-1)^{s_i} view; pm[i + N] = pm[i] so inner loops need no wraparound.
inline std::vector<std::int8_t> pm_view_doubled(const BitSequence& s) {
    const std::size_t n = s.period();
    std::vector<std::int8_t> pm(2 * n);
    for (std::size_t i = 0; i < n; ++i) pm[i] = pm[i + n] = s[i] ? -1 : 1;
    return pm;
}
}  // namespace detail

// Row-major concatenation of the N x T matrix whose columns are the inputs.
// Output u of period N*T satisfies u_{iT+j} = columns[j]_i.
inline BitSequence interleave(const std::vector<BitSequence>& columns) {
    if (columns.empty()) throw std::invalid_argument("interleave: need at least one column");
    const std::size_t n = columns.front().period();
    for (const BitSequence& c : columns)
        if (c.period() != n) throw std::invalid_argument("heterogeneous columns");
    const std::size_t t = columns.size();
    std::vector<std::uint8_t> out(n * t);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < t; ++j) out[i * t + j] = columns[j][i];
    return BitSequence(std::move(out));
}

// Inverse of interleave: split u into t_columns columns of period N / t_columns.
inline std::vector<BitSequence> deinterleave(const BitSequence& u, std::size_t t_columns) {
    if (t_columns == 0 || u.period() % t_columns != 0)
        throw std::invalid_argument("deinterleave: column count must divide the period");
    const std::size_t n = u.period() / t_columns;
    std::vector<BitSequence> cols;
    cols.reserve(t_columns);
    for (std::size_t j = 0; j < t_columns; ++j) {
        std::vector<std::uint8_t> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = u[i * t_columns + j];
        cols.emplace_back(std::move(c));
    }
    return cols;
}

// o_i = s_{(i+t) mod N}; t may be any integer.
inline BitSequence cyclic_shift(const BitSequence& s, long long t) {
    const std::size_t n = s.period();
    std::vector<std::uint8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = s.at_cyclic(static_cast<long long>(i) + t);
    return BitSequence(std::move(out));
}

// C_s(tau) = sum_i (-1)^{s_i + s_{i+tau}}; tau reduced mod N.
inline long long autocorrelation(const BitSequence& s, long long tau) {
    const std::size_t n = s.period();
    const std::size_t t = static_cast<std::size_t>(((tau % static_cast<long long>(n)) +
                                                    static_cast<long long>(n)) %
                                                   static_cast<long long>(n));
    long long acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + t < n ? i + t : i + t - n;
        acc += (s[i] == s[j]) ? 1 : -1;
    }
    return acc;
}

inline AutocorrSpectrum autocorrelation_spectrum(const BitSequence& s) {
    const std::size_t n = s.period();
    const std::vector<std::int8_t> pm = detail::pm_view_doubled(s);
    AutocorrSpectrum sp;
    sp.period = n;
    sp.values.resize(n);
    for (std::size_t tau = 0; tau < n; ++tau) {
        long long acc = 0;
        const std::int8_t* a = pm.data();
        const std::int8_t* b = pm.data() + tau;
        for (std::size_t i = 0; i < n; ++i) acc += static_cast<int>(a[i]) * static_cast<int>(b[i]);
        sp.values[tau] = acc;
    }
    return sp;
}

inline BitSequence complement(const BitSequence& s) {
    std::vector<std::uint8_t> out(s.period());
    for (std::size_t i = 0; i < s.period(); ++i) out[i] = static_cast<std::uint8_t>(1 - s[i]);
    return BitSequence(std::move(out));
}

// sum_i (-1)^{s_i}
inline long long imbalance(const BitSequence& s) {
    long long acc = 0;
    for (std::size_t i = 0; i < s.period(); ++i) acc += s[i] ? -1 : 1;
    return acc;
}

inline std::map<long long, std::size_t> spectrum_histogram(const AutocorrSpectrum& sp) {
    std::map<long long, std::size_t> h;
    for (long long v : sp.values) ++h[v];
    return h;
}

}  // namespace adicseq
