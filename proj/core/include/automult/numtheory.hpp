#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "automult/bigint.hpp"

namespace automult {

// nu_p(n): exponent of p in n.  Undefined (error) for n = 0.  The second
// form also yields the cofactor n / p^nu_p(n).
unsigned long nu_p(const Int& n, const Int& p);
unsigned long nu_p(const Int& n, const Int& p, Int* rest);

// gcd(m^inf, n): the largest divisor of n composed of primes dividing m,
// i.e. the product of p^(nu_p(n)) over primes p | gcd(m, n).  Needs n >= 1,
// m >= 1.  No factoring involved.
Int gcd_inf(const Int& m, const Int& n);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);
bool is_prime(const Int& n);

// Prime factorization with ascending primes.  Supported range is
// 1 <= n <= 10^18 (trial division plus Pollard rho); larger inputs error.
std::vector<std::pair<Int, unsigned long>> factorize(const Int& n);

// Primes <= limit, ascending.
std::vector<std::uint64_t> sieve(std::uint64_t limit);

Int euler_phi(const Int& n);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
Int multiplicative_order(const Int& a, const Int& m);

}  // namespace automult
