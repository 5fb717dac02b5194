#include "automult/ipr.hpp"

#include <algorithm>
#include <set>

#include "automult/error.hpp"

namespace automult {

void check_ipr(const IprSet& a) {
    if (a.n0 < 0) throw Error("negative", "offset must be nonnegative");
    for (const Int& s : a.sides)
        if (s <= 0) throw Error("bad-argument", "sidelengths must be positive");
}

std::vector<unsigned long> ipr_residues(const IprSet& a, unsigned long m) {
    check_ipr(a);
    if (m == 0) throw Error("bad-argument", "modulus must be positive");
    std::vector<char> hit(m, 0);
    hit[mpz_fdiv_ui(a.n0.get_mpz_t(), m)] = 1;
    for (const Int& side : a.sides) {
        unsigned long s = mpz_fdiv_ui(side.get_mpz_t(), m);
        std::vector<char> next = hit;
        for (unsigned long r = 0; r < m; ++r)
            if (hit[r]) next[(r + s) % m] = 1;
        hit = std::move(next);
    }
    std::vector<unsigned long> out;
    for (unsigned long r = 0; r < m; ++r)
        if (hit[r]) out.push_back(r);
    return out;
}

std::vector<Int> ipr_elements(const IprSet& a) {
    check_ipr(a);
    if (a.rank() > 20) throw Error("out-of-range", "subset enumeration capped at rank 20");
    std::set<Int> out;
    std::size_t r = a.rank();
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        Int s = a.n0;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (std::size_t{1} << i)) s += a.sides[i];
        out.insert(s);
    }
    return {out.begin(), out.end()};
}

}  // namespace automult
