#pragma once

#include <vector>

#include "automult/bigint.hpp"

namespace automult {

// {n_0 + sum_{i in I} n_i : I subset of [r]} for positive sidelengths n_i.
struct IprSet {
    Int n0;
    std::vector<Int> sides;

    std::size_t rank() const { return sides.size(); }
};

void check_ipr(const IprSet& a);

// Exact residue set of the IprSet mod m, ascending.  Built by incremental
// sumsets, so any rank is fine.  When every sidelength is coprime to m the
// result has at least min(m, r+1) elements.
std::vector<unsigned long> ipr_residues(const IprSet& a, unsigned long m);

// All elements by subset enumeration; rank capped at 20.
std::vector<Int> ipr_elements(const IprSet& a);

}  // namespace automult
