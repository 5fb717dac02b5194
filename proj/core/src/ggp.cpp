#include "automult/ggp.hpp"

#include <algorithm>
#include <numeric>

#include "automult/error.hpp"
#include "automult/numtheory.hpp"

namespace automult {

namespace {

constexpr int kMaxDoublings = 24;

}  // namespace

bool Ggp::nonzero_coeffs() const {
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] == 0) return false;
    return true;
}

void check_ggp(const Ggp& g) {
    if (g.base < 2) throw Error("bad-base", "base must be >= 2");
    if (g.coeffs.empty()) throw Error("bad-ggp", "need at least the constant coefficient");
    if (!g.restrictions.empty() && g.restrictions.size() != g.rank())
        throw Error("bad-ggp", "restriction count must equal rank");
}

Rat ggp_value(const Ggp& g, const std::vector<unsigned long>& alpha) {
    check_ggp(g);
    if (alpha.size() != g.rank()) throw Error("bad-ggp", "exponent count must equal rank");
    for (std::size_t i = 1; i < alpha.size(); ++i)
        if (alpha[i] <= alpha[i - 1]) throw Error("bad-ggp", "exponents must increase strictly");
    Rat s = g.coeffs[0];
    for (std::size_t i = 0; i < alpha.size(); ++i)
        s += g.coeffs[i + 1] * Rat(pow_int(static_cast<unsigned long>(g.base), alpha[i]));
    return s;
}

GgpConstants ggp_constants(const Ggp& g) {
    check_ggp(g);
    Int m = 1;
    for (const Rat& x : g.coeffs) m = lcm(m, Int(x.get_den()));
    Int max_scaled = 1;
    for (const Rat& x : g.coeffs) {
        Int a = abs(Int(Rat(x * Rat(m)).get_num()));
        max_scaled = std::max(max_scaled, a);
    }
    Int k(g.base);
    Int m_coprime = m / gcd_inf(k, m);
    unsigned long ord = 1;
    if (m_coprime > 1) ord = to_u64(multiplicative_order(k, m_coprime));
    // A block holds any scaled coefficient and a full cycle of the division
    // carries; transients beyond that are the retry loop's problem.
    unsigned long len = static_cast<unsigned long>(digit_length(max_scaled + 1, g.base));
    unsigned long b = std::lcm(std::max(len, 1ul), ord);
    return {b, 4 * b};
}

namespace {

// One slicing attempt at fixed block length.  Fails (nullopt) when the
// expansion does not fit, a pump region is not constant, or the degeneracy
// conditions trip; the caller doubles B and retries.
std::optional<GgpEncoding> try_encode(const Ggp& g, const std::vector<unsigned long>& alpha,
                                      const Int& s, unsigned long b) {
    int k = g.base;
    std::size_t r = g.rank();
    std::vector<unsigned long> t(r + 1, 0), l(r, 0);
    for (std::size_t i = 1; i <= r; ++i) {
        long long ti = static_cast<long long>(alpha[i - 1] / b) - 3 * static_cast<long long>(i) + 1;
        if (ti < static_cast<long long>(t[i - 1])) return std::nullopt;
        t[i] = static_cast<unsigned long>(ti);
        l[i - 1] = t[i] - t[i - 1];
    }
    unsigned long total = b * (1 + t[r] + 3 * r);
    if (digit_length(s, k) > total) return std::nullopt;

    DigitWord word = padded_suffix(s, k, total);
    std::vector<int> lsd(word.digits.rbegin(), word.digits.rend());
    std::size_t pos = 0;
    auto take = [&](std::size_t count) {
        std::vector<int> seg(lsd.begin() + pos, lsd.begin() + pos + count);
        pos += count;
        return DigitWord{k, std::vector<int>(seg.rbegin(), seg.rend())};
    };

    GgpEncoding enc;
    enc.base = k;
    enc.B = b;
    enc.C = 4 * b;
    enc.l = l;
    enc.value = s;
    enc.u.push_back(take(b));
    for (std::size_t i = 0; i < r; ++i) {
        DigitWord pump{k, std::vector<int>(b, 0)};  // invisible when l_i = 0
        for (unsigned long rep = 0; rep < l[i]; ++rep) {
            DigitWord block = take(b);
            if (rep == 0)
                pump = block;
            else if (!(block == pump))
                return std::nullopt;  // transient leaked into the pump region
        }
        enc.v.push_back(pump);
        enc.u.push_back(take(3 * b));
    }
    if (pos != lsd.size()) throw Error("internal", "block slicing left digits over");

    // Exact reconstruction and alignment are consequences of the slicing;
    // keep them as hard checks since certificates quote them.
    DigitWord assembled = enc.u[r];
    for (std::size_t i = r; i-- > 0;) {
        assembled = concat(assembled, repeat(enc.v[i], enc.l[i]));
        assembled = concat(assembled, enc.u[i]);
    }
    if (word_to_int(assembled) != s) throw Error("internal", "block reconstruction mismatch");
    for (std::size_t i = 1; i <= r; ++i) {
        unsigned long anchor = b * (t[i] + 3 * i - 1);
        if (alpha[i - 1] < anchor || alpha[i - 1] >= anchor + b)
            throw Error("internal", "alignment inequality violated");
    }

    if (r >= 1 && g.nonzero_coeffs() && !nondegenerate(enc)) return std::nullopt;
    return enc;
}

}  // namespace

GgpEncoding ggp_encode(const Ggp& g, const std::vector<unsigned long>& alpha) {
    check_ggp(g);
    std::size_t r = g.rank();
    if (alpha.size() != r) throw Error("bad-ggp", "exponent count must equal rank");
    if (!g.restrictions.empty()) {
        for (std::size_t i = 0; i < r; ++i)
            if (!g.restrictions[i].admits(alpha[i]))
                throw Error("bad-ggp", "exponent violates restriction");
    }
    Rat sv = ggp_value(g, alpha);
    if (sv.get_den() != 1)
        throw Error("not-an-integer", "value " + sv.get_str() + " is not an integer");
    Int s(sv.get_num());
    if (s < 0) throw Error("negative", "encoded value must be nonnegative");

    GgpConstants gc = ggp_constants(g);
    unsigned long prev = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (alpha[i] < prev + gc.C)
            throw Error("spacing-too-small",
                        "exponent spacing must be at least C = " + std::to_string(gc.C));
        prev = alpha[i];
    }
    unsigned long b = gc.B;
    for (int attempt = 0; attempt < kMaxDoublings; ++attempt, b *= 2)
        if (auto enc = try_encode(g, alpha, s, b)) return *enc;
    throw Error("encoding-failed", "no block length stabilized the expansion");
}

bool nondegenerate(const GgpEncoding& enc) {
    return rank_of_basic(encoding_pattern(enc)).certified;
}

BasicAridSet encoding_pattern(const GgpEncoding& enc) {
    BasicAridSet a;
    a.base = enc.base;
    a.u = enc.u;
    a.v = enc.v;
    check_shape(a);
    return a;
}

}  // namespace automult
