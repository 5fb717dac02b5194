#pragma once

#include <vector>

#include "automult/digits.hpp"

namespace automult {

// Divisor-bound certificate for the pumped family [w v^l u]_k: constants
// D_1 = [wu]_k, D_0 = |k^|u| [v]_k - (k^|v| - 1) [u]_k|, D = D_0 * D_1, and
// per prime p a stride q such that nu_p([w v^l u]_k) <= nu_p(D) whenever
// q | l, l >= 1.
struct SmallGcdCertificate {
    int base = 2;
    DigitWord w, v, u;
    Int d0, d1, d;

    struct PrimeEntry {
        Int p;
        unsigned long nu_d = 0;  // nu_p(D)
        Int q;                   // replay stride
    };
    std::vector<PrimeEntry> entries;
};

// Requires [w]_k != 0, [u]_k != 0, v nonempty.  Each entry is verified by
// replay at l in {q, 2q, ..., 10q} before the certificate is returned.
SmallGcdCertificate small_gcd_certificate(const DigitWord& w, const DigitWord& v,
                                          const DigitWord& u, const std::vector<Int>& primes);

// [w v^l u]_k computed in closed form (no word assembly).
Int pumped_value(const DigitWord& w, const DigitWord& v, const DigitWord& u, unsigned long l);

}  // namespace automult
