#include "automult/vanishing.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "automult/error.hpp"

namespace automult {

std::optional<std::vector<VanishingGroup>> vanishing_partition(
    const std::vector<Rat>& x, const std::vector<unsigned long>& alpha, int base,
    unsigned long diameter) {
    if (base < 2) throw Error("bad-base", "base must be >= 2");
    if (x.size() != alpha.size())
        throw Error("bad-argument", "coefficient and exponent counts differ");
    if (diameter == 0) throw Error("bad-argument", "diameter bound must be positive");
    std::size_t r = x.size();
    if (r == 0) return std::vector<VanishingGroup>{};
    if (r > 12) throw Error("out-of-range", "partition search capped at 12 terms");

    std::vector<Rat> terms(r);
    Rat total = 0;
    for (std::size_t i = 0; i < r; ++i) {
        terms[i] = x[i] * Rat(pow_int(static_cast<unsigned long>(base), alpha[i]));
        total += terms[i];
    }
    if (total != 0) throw Error("not-vanishing", "input sum is nonzero");

    std::vector<std::size_t> assign(r, 0);
    std::optional<std::vector<VanishingGroup>> best;
    std::size_t best_groups = r + 1;

    auto evaluate = [&]() {
        std::size_t groups = *std::max_element(assign.begin(), assign.end()) + 1;
        if (groups >= best_groups) return;
        std::vector<VanishingGroup> out(groups);
        std::vector<Rat> sums(groups, Rat(0));
        std::vector<unsigned long> lo(groups, ULONG_MAX), hi(groups, 0);
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t g = assign[i];
            out[g].indices.push_back(i + 1);
            sums[g] += terms[i];
            lo[g] = std::min(lo[g], alpha[i]);
            hi[g] = std::max(hi[g], alpha[i]);
        }
        for (std::size_t g = 0; g < groups; ++g) {
            if (sums[g] != 0) return;
            unsigned long gmin = hi[g] >= diameter ? hi[g] - diameter + 1 : 0;
            unsigned long gmax = lo[g] + diameter - 1;
            if (gmin > gmax) return;  // no common gamma within the diameter
            out[g].gamma = gmin;
        }
        best = std::move(out);
        best_groups = groups;
    };

    // Restricted growth strings enumerate each set partition exactly once.
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t used) {
        if (i == r) {
            evaluate();
            return;
        }
        for (std::size_t g = 0; g <= used; ++g) {
            assign[i] = g;
            walk(i + 1, std::max(used, g + 1));
        }
    };
    walk(1, 1);
    return best;
}

}  // namespace automult
