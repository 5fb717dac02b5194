#include "automult/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace automult {

unsigned long nu_p(const Int& n, const Int& p, Int* rest) {
    if (n == 0) throw Error("bad-argument", "valuation of 0 is undefined");
    if (p < 2) throw Error("bad-argument", "valuation base must be >= 2");
    Int cof;
    unsigned long e = mpz_remove(cof.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (rest) *rest = cof;
    return e;
}

unsigned long nu_p(const Int& n, const Int& p) { return nu_p(n, p, nullptr); }

Int gcd_inf(const Int& m, const Int& n) {
    if (m < 1 || n < 1) throw Error("bad-argument", "gcd_inf needs positive arguments");
    Int res = gcd(n, m);
    if (res == 1) return res;
    Int rest = n / res;
    for (;;) {
        Int h = gcd(rest, res);
        if (h == 1) return res;
        res *= h;
        rest /= h;
    }
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set decides primality for every n < 3.3 * 10^24, hence for
    // all 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    std::uint64_t x = 2, y = 2, c = 1, d = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_u64(std::uint64_t n, std::map<std::uint64_t, unsigned long>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned long>> factorize(const Int& n) {
    if (n < 1) throw Error("bad-argument", "factorize needs n >= 1");
    static const Int kLimit = Int("1000000000000000000");
    if (n > kLimit) throw Error("out-of-range", "factorize supports n <= 10^18, got " + n.get_str());
    std::uint64_t rest = to_u64(n);
    std::map<std::uint64_t, unsigned long> acc;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        while (rest % p == 0) {
            rest /= p;
            ++acc[p];
        }
    }
    if (rest > 1) factor_u64(rest, acc);
    std::vector<std::pair<Int, unsigned long>> out;
    out.reserve(acc.size());
    for (const auto& [p, e] : acc) out.emplace_back(Int(static_cast<unsigned long>(p)), e);
    return out;
}

std::vector<std::uint64_t> sieve(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> comp(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return primes;
}

Int euler_phi(const Int& n) {
    Int phi = 1;
    for (const auto& [p, e] : factorize(n)) phi *= pow_int(p, e - 1) * (p - 1);
    return phi;
}

Int multiplicative_order(const Int& a, const Int& m) {
    if (m < 1) throw Error("bad-argument", "order needs modulus >= 1");
    if (m == 1) return 1;
    Int ar = a % m;
    if (ar < 0) ar += m;
    if (gcd(ar, m) != 1) throw Error("bad-argument", "order needs gcd(a, m) = 1");
    Int order = euler_phi(m);
    for (const auto& [p, e] : factorize(order)) {
        for (unsigned long i = 0; i < e; ++i) {
            Int candidate = order / p;
            Int pw;
            mpz_powm(pw.get_mpz_t(), ar.get_mpz_t(), candidate.get_mpz_t(), m.get_mpz_t());
            if (pw == 1)
                order = candidate;
            else
                break;
        }
    }
    return order;
}

}  // namespace automult
