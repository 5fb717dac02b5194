#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "automult/digits.hpp"

namespace automult {

// Admissible pump counts l in offset + modulus * N_0.
struct LengthRestriction {
    unsigned long offset = 0;
    unsigned long modulus = 1;

    bool admits(unsigned long l) const { return l >= offset && (l - offset) % modulus == 0; }
    bool unrestricted() const { return offset == 0 && modulus == 1; }
    bool operator==(const LengthRestriction&) const = default;
};

// Values [u_r v_r^(l_r) ... u_1 v_1^(l_1) u_0]_k over admissible pump
// vectors.  u[i] and v[i-1] share the subscript i of the usual notation;
// u[0] sits at the least significant end.  Words may be empty; leading
// zeros in an instantiated pattern are allowed and do not change the value.
struct BasicAridSet {
    int base = 2;
    std::vector<DigitWord> u;                      // u[0] .. u[r]
    std::vector<DigitWord> v;                      // v[0] = v_1 .. v[r-1] = v_r
    std::vector<LengthRestriction> restrictions;   // empty means unrestricted

    std::size_t rank() const { return v.size(); }
    LengthRestriction restriction(std::size_t i) const {
        return restrictions.empty() ? LengthRestriction{} : restrictions.at(i);
    }
};

// Finite union of basic sets over one base.
struct AridSet {
    std::vector<BasicAridSet> parts;
};

void check_shape(const BasicAridSet& a);

// Value at a concrete pump vector (one count per v block).
Int arid_value(const BasicAridSet& a, const std::vector<unsigned long>& pumps);

bool arid_member(const BasicAridSet& a, const Int& n);
bool arid_member(const AridSet& a, const Int& n);

// All members <= limit, ascending and deduplicated.
std::vector<Int> arid_enumerate(const BasicAridSet& a, const Int& limit);
std::vector<Int> arid_enumerate(const AridSet& a, const Int& limit);

// x * k^(c*l) for l in N_0; c = 0 encodes the singleton {x}.
struct GeometricProgression {
    Int x;
    unsigned long c = 0;

    bool degenerate() const { return c == 0; }
    bool operator==(const GeometricProgression&) const = default;
};

std::vector<Int> progression_elements(const GeometricProgression& g, int base, const Int& limit);

// Triple satisfying the divisor-bound hypotheses ([w], [u] nonzero, v
// nonempty): every value [w v^l u]_k with l in a fixed residue class has
// p-adic valuations bounded by a constant, so the family eventually leaves
// any set closed under the pattern.
struct ForbiddenWitness {
    DigitWord w, v, u;
};

using PatternCheck = std::variant<GeometricProgression, ForbiddenWitness>;

// Decides whether a basic set is a (possibly degenerate) geometric
// progression {x k^(c l)} and otherwise produces a ForbiddenWitness.  The
// input must normalize (empty v blocks dropped) to rank <= 1; higher ranks
// are answered with a witness obtained by freezing all pumps but one.
PatternCheck forbidden_pattern_check(const BasicAridSet& a);

struct RankResult {
    bool certified = false;
    std::size_t rank = 0;
    std::string reason;  // set when not certified
};

// Certifies the rank of a block-shaped basic set: |u_0| = |v_i| = B,
// |u_i| = 3B, the top word nonzero, and no adjacent pump merge
// v_i^3 = u_i = v_(i-1)^3.
RankResult rank_of_basic(const BasicAridSet& a);

struct ContainmentResult {
    bool contained = true;
    std::optional<Int> counterexample;  // least member of A <= limit outside B
};

ContainmentResult containment_oracle(const AridSet& a, const AridSet& b, const Int& limit);

}  // namespace automult
