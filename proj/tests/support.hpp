// Shared helpers for the test suites.  Everything here is an independent
// re-derivation: the oracles never call the code path they are checking.
#pragma once

#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "automult/bigint.hpp"
#include "automult/digits.hpp"
#include "automult/value.hpp"

namespace testsupport {

using automult::DigitWord;
using automult::Int;
using automult::Rat;
using automult::Value;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::uint64_t pick(std::mt19937_64& g, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(g);
}

// Numeric shadow of a Value; exact scalars must agree with it to rounding.
inline std::complex<double> to_complex(const Value& v) {
    double mag = v.coeff().get_d();
    double ang = 2.0 * 3.14159265358979323846 * static_cast<double>(v.root_num()) /
                 static_cast<double>(v.root_den());
    return std::polar(mag, ang);
}

inline bool close(const std::complex<double>& a, const std::complex<double>& b,
                  double tol = 1e-9) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

// Horner evaluation of a most-significant-first digit vector.
inline Int word_value_oracle(const DigitWord& w) {
    Int acc = 0;
    for (int d : w.digits) acc = acc * w.base + d;
    return acc;
}

inline DigitWord random_word(std::mt19937_64& g, int base, std::size_t len) {
    std::vector<int> digits(len);
    for (auto& d : digits) d = static_cast<int>(pick(g, 0, base - 1));
    return DigitWord(base, std::move(digits));
}

// Digit-vector concatenation, most significant block first.
inline DigitWord join(int base, const std::vector<DigitWord>& blocks) {
    DigitWord out(base, {});
    for (const DigitWord& b : blocks)
        out.digits.insert(out.digits.end(), b.digits.begin(), b.digits.end());
    return out;
}

inline DigitWord repeat_oracle(const DigitWord& v, unsigned long times) {
    DigitWord out(v.base, {});
    for (unsigned long i = 0; i < times; ++i)
        out.digits.insert(out.digits.end(), v.digits.begin(), v.digits.end());
    return out;
}

inline Int pow_oracle(unsigned long base, unsigned long e) {
    Int acc = 1;
    for (unsigned long i = 0; i < e; ++i) acc *= base;
    return acc;
}

inline unsigned long gcd_u64(unsigned long a, unsigned long b) { return std::gcd(a, b); }

}  // namespace testsupport
