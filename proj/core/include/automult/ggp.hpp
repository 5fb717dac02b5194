#pragma once

#include <vector>

#include "automult/aridsets.hpp"
#include "automult/bigint.hpp"

namespace automult {

// Values x_0 + sum x_i base^(alpha_i) over exponent tuples alpha_1 < ... <
// alpha_r (alpha_0 := 0).  Restrictions, when present, constrain each
// alpha_i to an arithmetic progression and are carried as data.
struct Ggp {
    int base = 2;
    std::vector<Rat> coeffs;  // x_0 .. x_r
    std::vector<LengthRestriction> restrictions;

    std::size_t rank() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool nonzero_coeffs() const;  // x_i != 0 for all i >= 1
};

void check_ggp(const Ggp& g);

// Exact value at one exponent tuple.
Rat ggp_value(const Ggp& g, const std::vector<unsigned long>& alpha);

struct GgpConstants {
    unsigned long B = 1;  // block length
    unsigned long C = 4;  // required exponent spacing, always 4B
};

// Constants computed from the coefficients alone (never from alpha): B is a
// multiple of the digit period of the coefficient denominators, large
// enough to absorb carry transients; C = 4B.
GgpConstants ggp_constants(const Ggp& g);

// Digit-block form of one encoded value: u_0 of length B, islands u_i of
// length 3B, pumps v_i of length B repeated l_i times.
struct GgpEncoding {
    int base = 2;
    unsigned long B = 1, C = 4;
    std::vector<DigitWord> u;       // u[0] .. u[r]
    std::vector<DigitWord> v;       // v[0] = v_1 .. v[r-1] = v_r
    std::vector<unsigned long> l;   // pump counts l_1 .. l_r
    Int value;                      // the encoded integer
};

// Slices the expansion of ggp_value(g, alpha) into blocks, doubling B until
// every pump region is constant and the alignment inequality
// 0 <= alpha_i - B*(sum_{j<=i} l_j + 3i - 1) < B holds for every i.
GgpEncoding ggp_encode(const Ggp& g, const std::vector<unsigned long>& alpha);

// u_r nonzero and no index with v_i^3 = u_i = v_(i-1)^3.
bool nondegenerate(const GgpEncoding& enc);

// The unrestricted basic arid set whose pump counts generalize enc.
BasicAridSet encoding_pattern(const GgpEncoding& enc);

}  // namespace automult
