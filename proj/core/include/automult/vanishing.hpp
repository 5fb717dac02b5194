#pragma once

#include <optional>
#include <vector>

#include "automult/bigint.hpp"

namespace automult {

// One group of a vanishing split: indices (1-based) whose terms sum to zero
// exactly, clustered around a common exponent gamma.
struct VanishingGroup {
    std::vector<std::size_t> indices;
    unsigned long gamma = 0;  // |gamma - alpha_i| < C for every member
};

// Splits a vanishing sum x_1 k^(alpha_1) + ... + x_r k^(alpha_r) = 0 into
// the fewest groups that each vanish and have exponent diameter < C.
// Exhaustive over set partitions; r is capped at 12.
std::optional<std::vector<VanishingGroup>> vanishing_partition(const std::vector<Rat>& x,
                                                               const std::vector<unsigned long>& alpha,
                                                               int base, unsigned long diameter);

}  // namespace automult
