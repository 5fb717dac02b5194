#include "automult/aridsets.hpp"

#include <algorithm>
#include <set>

#include "automult/error.hpp"

namespace automult {

namespace {

bool zero_valued(const DigitWord& w) { return w.all_zero(); }

// Strips the low |w| digits of rest if they spell w; returns the quotient.
std::optional<Int> consume_low(const Int& rest, const DigitWord& w) {
    if (w.empty()) return rest;
    Int shift = pow_int(static_cast<unsigned long>(w.base), w.size());
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), shift.get_mpz_t());
    if (r != word_to_int(w)) return std::nullopt;
    return q;
}

}  // namespace

void check_shape(const BasicAridSet& a) {
    if (a.base < 2) throw Error("bad-base", "base must be >= 2");
    if (a.u.size() != a.v.size() + 1)
        throw Error("bad-pattern", "need exactly one more island than pump block");
    if (!a.restrictions.empty() && a.restrictions.size() != a.v.size())
        throw Error("bad-pattern", "restriction count must match pump blocks");
    for (const auto& w : a.u)
        if (w.base != a.base) throw Error("base-mismatch", "island word base differs");
    for (const auto& w : a.v)
        if (w.base != a.base) throw Error("base-mismatch", "pump word base differs");
    for (const auto& res : a.restrictions)
        if (res.modulus == 0) throw Error("bad-pattern", "restriction modulus must be positive");
}

Int arid_value(const BasicAridSet& a, const std::vector<unsigned long>& pumps) {
    check_shape(a);
    if (pumps.size() != a.v.size())
        throw Error("bad-pattern", "pump vector length must equal rank");
    for (std::size_t i = a.v.size(); i-- > 0;) {
        if (!a.restriction(i).admits(pumps[i]))
            throw Error("bad-pattern", "pump count violates restriction");
    }
    DigitWord word = a.u.back();
    for (std::size_t i = a.v.size(); i-- > 0;) {
        word = concat(word, repeat(a.v[i], pumps[i]));
        word = concat(word, a.u[i]);
    }
    return word_to_int(word);
}

namespace {

// Matches n against the pattern from the least significant end.  Block i
// covers v[i] pumping followed by island u[i+1]; the recursion terminates
// when every block is consumed and the remaining quotient is zero.
bool match_from(const BasicAridSet& a, std::size_t i, const Int& rest) {
    if (i == a.v.size()) return rest == 0;
    const DigitWord& v = a.v[i];
    LengthRestriction res = a.restriction(i);
    Int cur = rest;
    unsigned long l = 0;
    while (true) {
        if (res.admits(l)) {
            if (auto after = consume_low(cur, a.u[i + 1]); after && match_from(a, i + 1, *after))
                return true;
        }
        if (v.empty()) return false;  // nothing to pump
        if (zero_valued(v) && cur == 0) {
            // Zero pump over an exhausted quotient matches at every larger
            // count and some admissible count always lies ahead.
            if (auto after = consume_low(cur, a.u[i + 1])) return match_from(a, i + 1, *after);
            return false;
        }
        auto pumped = consume_low(cur, v);
        if (!pumped) return false;
        cur = *pumped;
        ++l;
    }
}

}  // namespace

bool arid_member(const BasicAridSet& a, const Int& n) {
    check_shape(a);
    if (n < 0) throw Error("negative", "members are nonnegative");
    auto after = consume_low(n, a.u[0]);
    return after && match_from(a, 0, *after);
}

bool arid_member(const AridSet& a, const Int& n) {
    return std::any_of(a.parts.begin(), a.parts.end(),
                       [&](const BasicAridSet& part) { return arid_member(part, n); });
}

namespace {

void enumerate_from(const BasicAridSet& a, std::size_t i, const Int& acc, unsigned long pos,
                    const Int& limit, std::set<Int>& out) {
    if (acc > limit) return;
    if (i == a.v.size()) {
        out.insert(acc);
        return;
    }
    const DigitWord& v = a.v[i];
    const DigitWord& u = a.u[i + 1];
    LengthRestriction res = a.restriction(i);
    Int vval = v.empty() ? Int(0) : word_to_int(v);
    // Counts beyond this cap either push nonzero digits past the limit or
    // repeat an already-emitted value (zero pump under a zero-valued tail).
    unsigned long cap = res.offset + res.modulus * (digit_length(limit, a.base) / std::max<std::size_t>(v.size(), 1) + 2);
    Int cur = acc;
    unsigned long cur_pos = pos;
    for (unsigned long l = 0; l <= cap; ++l) {
        if (res.admits(l)) {
            Int with_u = cur + word_to_int(u) * pow_int(static_cast<unsigned long>(a.base), cur_pos);
            enumerate_from(a, i + 1, with_u, cur_pos + u.size(), limit, out);
        }
        if (v.empty()) break;
        cur += vval * pow_int(static_cast<unsigned long>(a.base), cur_pos);
        cur_pos += v.size();
        if (cur > limit) break;
    }
}

}  // namespace

std::vector<Int> arid_enumerate(const BasicAridSet& a, const Int& limit) {
    check_shape(a);
    std::set<Int> out;
    if (limit >= 0) enumerate_from(a, 0, word_to_int(a.u[0]), a.u[0].size(), limit, out);
    return {out.begin(), out.end()};
}

std::vector<Int> arid_enumerate(const AridSet& a, const Int& limit) {
    std::set<Int> out;
    for (const auto& part : a.parts) {
        auto sub = arid_enumerate(part, limit);
        out.insert(sub.begin(), sub.end());
    }
    return {out.begin(), out.end()};
}

std::vector<Int> progression_elements(const GeometricProgression& g, int base, const Int& limit) {
    std::vector<Int> out;
    if (g.x > limit) return out;
    out.push_back(g.x);
    if (g.degenerate() || g.x == 0) return out;
    Int ratio = pow_int(static_cast<unsigned long>(base), g.c);
    for (Int cur = g.x * ratio; cur <= limit; cur *= ratio) out.push_back(cur);
    return out;
}

namespace {

struct NormalizedPattern {
    std::vector<DigitWord> u;
    std::vector<DigitWord> v;
    std::vector<LengthRestriction> res;
};

// Drops empty pump blocks, merging the islands around them.
NormalizedPattern normalize(const BasicAridSet& a) {
    NormalizedPattern n;
    n.u.push_back(a.u[0]);
    for (std::size_t i = 0; i < a.v.size(); ++i) {
        if (a.v[i].empty()) {
            n.u.back() = concat(a.u[i + 1], n.u.back());
        } else {
            n.v.push_back(a.v[i]);
            n.res.push_back(a.restriction(i));
            n.u.push_back(a.u[i + 1]);
        }
    }
    return n;
}

// Rewrites pump v with restriction offset+modulus*N_0 as the unrestricted
// pump v^modulus over the island extended by v^offset.
void absorb_restriction(DigitWord& v, DigitWord& lower, const LengthRestriction& res) {
    lower = concat(repeat(v, res.offset), lower);
    v = repeat(v, res.modulus);
}

ForbiddenWitness make_witness(DigitWord w, DigitWord v, DigitWord u) {
    // The divisor bound needs [w] and [u] nonzero; absorbing one pump copy
    // into a zero-valued side fixes it when the pump itself is nonzero.
    if (zero_valued(w)) w = concat(w, v);
    if (zero_valued(u)) u = concat(v, u);
    return ForbiddenWitness{std::move(w), std::move(v), std::move(u)};
}

}  // namespace

PatternCheck forbidden_pattern_check(const BasicAridSet& a) {
    check_shape(a);
    NormalizedPattern n = normalize(a);
    std::size_t r = n.v.size();
    if (r == 0) return GeometricProgression{word_to_int(n.u[0]), 0};
    if (r == 1) {
        DigitWord v = n.v[0];
        DigitWord lower = n.u[0];
        const DigitWord& upper = n.u[1];
        absorb_restriction(v, lower, n.res[0]);
        if (!zero_valued(v)) return make_witness(upper, v, lower);
        if (!zero_valued(lower)) {
            if (zero_valued(upper)) return GeometricProgression{word_to_int(lower), 0};
            return make_witness(upper, v, lower);
        }
        if (zero_valued(upper)) return GeometricProgression{Int(0), 0};
        unsigned long step = v.size() * n.res[0].modulus;
        Int x = word_to_int(upper) *
                pow_int(static_cast<unsigned long>(a.base), lower.size() + v.size() * n.res[0].offset);
        return GeometricProgression{x, step};
    }
    // Rank two or more: pump one block whose witness hypotheses hold and
    // freeze the others at their minimal admissible counts.
    for (std::size_t i = r; i-- > 0;) {
        DigitWord v = n.v[i];
        DigitWord lower = n.u[0];
        for (std::size_t j = 0; j < i; ++j) {
            lower = concat(repeat(n.v[j], n.res[j].offset), lower);
            lower = concat(n.u[j + 1], lower);
        }
        DigitWord upper = n.u[i + 1];
        for (std::size_t j = i + 1; j < r; ++j) {
            upper = concat(repeat(n.v[j], n.res[j].offset), upper);
            upper = concat(n.u[j + 1], upper);
        }
        absorb_restriction(v, lower, n.res[i]);
        if (!zero_valued(v) || (!zero_valued(lower) && !zero_valued(upper)))
            return make_witness(upper, v, lower);
    }
    throw Error("not-normalizable", "rank exceeds one and no pump admits a divisor-bound witness");
}

RankResult rank_of_basic(const BasicAridSet& a) {
    check_shape(a);
    std::size_t r = a.v.size();
    std::size_t b = a.u[0].size();
    if (b == 0) return {false, r, "u_0 must be nonempty"};
    for (std::size_t i = 0; i < r; ++i) {
        if (a.v[i].size() != b) return {false, r, "pump blocks must have length B"};
        if (a.u[i + 1].size() != 3 * b) return {false, r, "upper islands must have length 3B"};
    }
    if (zero_valued(a.u[r])) return {false, r, "top island is zero-valued"};
    for (std::size_t i = 1; i < r; ++i) {
        if (repeat(a.v[i], 3) == a.u[i] && a.u[i] == repeat(a.v[i - 1], 3))
            return {false, r, "adjacent pump blocks merge across island " + std::to_string(i)};
    }
    return {true, r, ""};
}

ContainmentResult containment_oracle(const AridSet& a, const AridSet& b, const Int& limit) {
    for (const Int& n : arid_enumerate(a, limit)) {
        if (!arid_member(b, n)) return {false, n};
    }
    return {true, std::nullopt};
}

}  // namespace automult
