#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "automult/error.hpp"

namespace automult {

// All arithmetic on sequence arguments and word values is arbitrary
// precision.  Machine integers are reserved for digit values, state ids and
// loop bounds that are small by construction.
using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_int(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline std::uint64_t to_u64(const Int& n, const char* what = "integer") {
    if (n < 0 || !n.fits_ulong_p())
        throw Error("out-of-range", std::string(what) + " does not fit in 64 bits: " + n.get_str());
    return static_cast<std::uint64_t>(n.get_ui());
}

}  // namespace automult
