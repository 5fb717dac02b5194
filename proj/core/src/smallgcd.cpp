#include "automult/smallgcd.hpp"

#include <algorithm>
#include <set>

#include "automult/error.hpp"
#include "automult/numtheory.hpp"

namespace automult {

namespace {

constexpr unsigned long kOrbitCap = 2000000;

// Least l >= 1 with g^l = 1 and (g^l - 1)/(g - 1) = 0 modulo pe, i.e. the
// least period of the affine step x -> g x + 1 started at 0.  Plain order
// of g is not enough when p divides g - 1.
Int affine_period(const Int& g, const Int& pe) {
    Int gl = 1 % pe, s = 0;
    for (unsigned long l = 1; l <= kOrbitCap; ++l) {
        gl = gl * g % pe;
        s = (s * g + 1) % pe;
        if (gl == 1 % pe && s == 0) return Int(l);
    }
    throw Error("certificate-too-large", "replay stride search exceeded cap");
}

}  // namespace

Int pumped_value(const DigitWord& w, const DigitWord& v, const DigitWord& u, unsigned long l) {
    if (w.base != v.base || v.base != u.base) throw Error("base-mismatch", "word bases differ");
    Int k(w.base);
    Int g = pow_int(static_cast<unsigned long>(w.base), v.size());
    Int gl;
    mpz_pow_ui(gl.get_mpz_t(), g.get_mpz_t(), l);
    Int geo = v.empty() ? Int(0) : (gl - 1) / (g - 1);  // 1 + g + ... + g^(l-1)
    Int val = word_to_int(w) * gl + word_to_int(v) * geo;
    return val * pow_int(static_cast<unsigned long>(w.base), u.size()) + word_to_int(u);
}

SmallGcdCertificate small_gcd_certificate(const DigitWord& w, const DigitWord& v,
                                          const DigitWord& u, const std::vector<Int>& primes) {
    if (w.base != v.base || v.base != u.base) throw Error("base-mismatch", "word bases differ");
    if (v.empty()) throw Error("bad-argument", "pump word must be nonempty");
    Int wv = word_to_int(w), uv = word_to_int(u);
    if (wv == 0 || uv == 0)
        throw Error("bad-argument", "divisor bound needs nonzero-valued w and u");

    SmallGcdCertificate cert;
    cert.base = w.base;
    cert.w = w;
    cert.v = v;
    cert.u = u;
    cert.d1 = word_to_int(concat(w, u));
    Int ku = pow_int(static_cast<unsigned long>(w.base), u.size());
    Int kv = pow_int(static_cast<unsigned long>(w.base), v.size());
    cert.d0 = abs(ku * word_to_int(v) - (kv - 1) * uv);
    if (cert.d0 == 0 || cert.d1 == 0) throw Error("internal", "divisor constants vanished");
    cert.d = cert.d0 * cert.d1;

    std::set<Int> uniq(primes.begin(), primes.end());
    for (const Int& p : uniq) {
        if (!is_prime(p)) throw Error("bad-argument", "certificate primes must be prime");
        SmallGcdCertificate::PrimeEntry entry;
        entry.p = p;
        entry.nu_d = nu_p(cert.d, p);
        if (Int(w.base) % p == 0) {
            // p divides the base: beyond nu_p(D_0) digits the pumped part
            // only shifts valuation past D_0.
            entry.q = Int(nu_p(cert.d0, p) / v.size() + 1);
        } else {
            Int pe = pow_int(p, nu_p(cert.d1, p) + 1);
            entry.q = affine_period(kv % pe, pe);
        }
        // Replay: the certificate is only issued if the bound holds on the
        // quoted strides.
        for (unsigned long mult = 1; mult <= 10; ++mult) {
            unsigned long l = to_u64(entry.q * Int(mult));
            if (nu_p(pumped_value(w, v, u, l), p) > entry.nu_d)
                throw Error("internal", "replay exceeded the divisor bound");
        }
        cert.entries.push_back(std::move(entry));
    }
    return cert;
}

}  // namespace automult
