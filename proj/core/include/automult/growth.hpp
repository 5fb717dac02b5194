#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "automult/aridsets.hpp"
#include "automult/dfao.hpp"

namespace automult {

// Certifies exponential growth: for every mix word m in {v1, v2}^* the
// value [w m u]_k lies in the language, |v1| = |v2|, v1 != v2, and all
// such values share the output `constant`.
struct ExponentialWitness {
    DigitWord w, v1, v2, u;
    Value constant;
};

struct GrowthAnalysis {
    enum class Kind { Empty, Polynomial, Exponential };
    Kind kind = Kind::Empty;

    // Polynomial case: the accepted-count function is Theta(length^degree).
    std::size_t block_count = 0;  // most pumpable cycles along one accepted path
    long degree = -1;             // block_count - 1; -1 only for finite languages
    std::vector<BasicAridSet> decomposition;  // exact cover by slender patterns

    std::optional<ExponentialWitness> witness;  // exponential case
};

using AcceptPredicate = std::function<bool(const Value&)>;

// Growth of {n >= 0 : accept(a(n))} as a language of canonical expansions.
// Counts are by value, the empty word standing for n = 0.
GrowthAnalysis language_growth(const Dfao& d, const AcceptPredicate& accept);

// Convenience wrapper for the support {n : a(n) != 0}.
GrowthAnalysis support_growth(const Dfao& d);

}  // namespace automult
