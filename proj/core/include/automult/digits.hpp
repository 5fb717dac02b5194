#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "automult/bigint.hpp"

namespace automult {

// Fixed-base digit word.  Digits are stored most-significant-first, so a
// word prints the way the number is written; digit values live in [0, base).
//
// Automata elsewhere consume words least-significant digit first; that is a
// property of word *evaluation*, not of this container.
struct DigitWord {
    int base = 2;
    std::vector<int> digits;  // most significant first

    DigitWord() = default;
    DigitWord(int base, std::vector<int> digits);

    std::size_t size() const { return digits.size(); }
    bool empty() const { return digits.empty(); }
    bool all_zero() const;

    bool operator==(const DigitWord&) const = default;
};

// [u]_k: value of a word; the empty word has value 0.
Int word_to_int(const DigitWord& u);

// (n)_k: canonical expansion without leading zeros; (0)_k is the empty word.
DigitWord int_to_word(const Int& n, int base);

// (n)_k^l: the length-l suffix of 0^inf (n)_k.  Pads with leading zeros when
// l exceeds the canonical length, truncates to the low l digits otherwise,
// so its value is n mod k^l.
DigitWord padded_suffix(const Int& n, int base, std::size_t l);

DigitWord concat(const DigitWord& u, const DigitWord& v);
DigitWord repeat(const DigitWord& v, std::size_t times);

// Number of digits of (n)_k; zero for n = 0.
std::size_t digit_length(const Int& n, int base);

// One character per digit for base <= 10, comma-separated decimal digits for
// larger bases.  word_from_string accepts exactly these two shapes.
std::string word_to_string(const DigitWord& u);
DigitWord word_from_string(const std::string& text, int base);

}  // namespace automult
