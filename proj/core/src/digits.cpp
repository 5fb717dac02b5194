#include "automult/digits.hpp"

#include <algorithm>
#include <sstream>

namespace automult {

namespace {

void check_base(int base) {
    if (base < 2) throw Error("bad-base", "base must be at least 2, got " + std::to_string(base));
}

}  // namespace

DigitWord::DigitWord(int base_, std::vector<int> digits_) : base(base_), digits(std::move(digits_)) {
    check_base(base);
    for (int d : digits) {
        if (d < 0 || d >= base)
            throw Error("bad-digit",
                        "digit " + std::to_string(d) + " out of range for base " + std::to_string(base));
    }
}

bool DigitWord::all_zero() const {
    return std::all_of(digits.begin(), digits.end(), [](int d) { return d == 0; });
}

Int word_to_int(const DigitWord& u) {
    Int value = 0;
    for (int d : u.digits) {
        value *= u.base;
        value += d;
    }
    return value;
}

DigitWord int_to_word(const Int& n, int base) {
    check_base(base);
    if (n < 0) throw Error("negative", "no expansion for negative " + n.get_str());
    DigitWord w;
    w.base = base;
    Int rest = n;
    while (rest > 0) {
        Int q;
        unsigned long r = mpz_fdiv_q_ui(q.get_mpz_t(), rest.get_mpz_t(), base);
        w.digits.push_back(static_cast<int>(r));
        rest = q;
    }
    std::reverse(w.digits.begin(), w.digits.end());
    return w;
}

DigitWord padded_suffix(const Int& n, int base, std::size_t l) {
    DigitWord canonical = int_to_word(n, base);
    DigitWord w;
    w.base = base;
    w.digits.assign(l, 0);
    std::size_t take = std::min(l, canonical.size());
    for (std::size_t i = 0; i < take; ++i)
        w.digits[l - 1 - i] = canonical.digits[canonical.size() - 1 - i];
    return w;
}

DigitWord concat(const DigitWord& u, const DigitWord& v) {
    if (u.base != v.base) throw Error("base-mismatch", "cannot concatenate words of different bases");
    DigitWord w = u;
    w.digits.insert(w.digits.end(), v.digits.begin(), v.digits.end());
    return w;
}

DigitWord repeat(const DigitWord& v, std::size_t times) {
    DigitWord w;
    w.base = v.base;
    w.digits.reserve(v.size() * times);
    for (std::size_t i = 0; i < times; ++i)
        w.digits.insert(w.digits.end(), v.digits.begin(), v.digits.end());
    return w;
}

std::size_t digit_length(const Int& n, int base) {
    check_base(base);
    if (n < 0) throw Error("negative", "no expansion for negative " + n.get_str());
    if (n == 0) return 0;
    std::size_t len = 0;
    Int rest = n;
    while (rest > 0) {
        rest /= base;
        ++len;
    }
    return len;
}

std::string word_to_string(const DigitWord& u) {
    std::ostringstream out;
    if (u.base <= 10) {
        for (int d : u.digits) out << d;
    } else {
        for (std::size_t i = 0; i < u.digits.size(); ++i) {
            if (i) out << ',';
            out << u.digits[i];
        }
    }
    return out.str();
}

DigitWord word_from_string(const std::string& text, int base) {
    check_base(base);
    std::vector<int> digits;
    if (base <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9') throw Error("bad-word", "unexpected character in digit word: " + text);
            digits.push_back(c - '0');
        }
    } else if (!text.empty()) {
        std::istringstream in(text);
        std::string piece;
        while (std::getline(in, piece, ',')) {
            if (piece.empty()) throw Error("bad-word", "empty digit in word: " + text);
            digits.push_back(std::stoi(piece));
        }
    }
    return DigitWord(base, std::move(digits));
}

}  // namespace automult
