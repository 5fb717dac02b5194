#include "automult/characters.hpp"

#include <map>
#include <numeric>
#include <tuple>

#include "automult/error.hpp"
#include "automult/numtheory.hpp"

namespace automult {

namespace {

constexpr unsigned long kModulusCap = 1000000;

unsigned long powmod_ul(unsigned long b, unsigned long e, unsigned long m) {
    unsigned long r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<unsigned long>((static_cast<unsigned __int128>(r) * b) % m);
        b = static_cast<unsigned long>((static_cast<unsigned __int128>(b) * b) % m);
        e >>= 1;
    }
    return r;
}

unsigned long primitive_root(unsigned long p) {
    if (p == 2) return 1;
    auto fac = factorize(Int(p - 1));
    for (unsigned long g = 2;; ++g) {
        bool ok = true;
        for (const auto& [q, e] : fac) {
            if (powmod_ul(g, (p - 1) / to_u64(q), p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
}

// Unit group of one prime power as at most two independent generators.
struct UnitComponent {
    unsigned long pe = 1;
    unsigned long o1 = 1, o2 = 1;                       // generator orders
    std::vector<std::pair<unsigned long, unsigned long>> dlog;  // residue -> exponents
};

UnitComponent make_component(unsigned long p, unsigned long e) {
    UnitComponent c;
    c.pe = 1;
    for (unsigned long i = 0; i < e; ++i) c.pe *= p;
    unsigned long g1 = 1, g2 = 1;
    if (p == 2) {
        if (e == 1) {
            c.o1 = 1;
        } else if (e == 2) {
            c.o1 = 2;
            g1 = 3;
        } else {
            c.o1 = 2;
            g1 = c.pe - 1;
            c.o2 = c.pe / 4;
            g2 = 5;
        }
    } else {
        unsigned long g = primitive_root(p);
        if (e > 1 && powmod_ul(g, p - 1, p * p) == 1) g += p;
        g1 = g % c.pe;
        c.o1 = c.pe / p * (p - 1);
    }
    c.dlog.assign(c.pe, {0, 0});
    for (unsigned long t1 = 0; t1 < c.o1; ++t1) {
        for (unsigned long t2 = 0; t2 < c.o2; ++t2) {
            unsigned long res = static_cast<unsigned long>(
                (static_cast<unsigned __int128>(powmod_ul(g1, t1, c.pe)) *
                 powmod_ul(g2, t2, c.pe)) %
                c.pe);
            c.dlog[res] = {t1, t2};
        }
    }
    return c;
}

}  // namespace

DirichletCharacter::DirichletCharacter() : table_{Value::one()} {}

DirichletCharacter::DirichletCharacter(unsigned long modulus, unsigned long index,
                                       std::vector<Value> table)
    : m_(modulus), index_(index), table_(std::move(table)) {
    if (m_ == 0 || table_.size() != m_) throw Error("bad-character", "table size must equal modulus");
    order_ = 1;
    for (const Value& v : table_)
        if (!v.is_zero()) order_ = std::lcm(order_, v.root_den());
}

bool DirichletCharacter::principal() const {
    for (unsigned long n = 0; n < m_; ++n)
        if (!table_[n].is_zero() && !table_[n].is_one()) return false;
    return true;
}

std::string DirichletCharacter::label() const {
    return "chi(" + std::to_string(m_) + "," + std::to_string(index_) + ")";
}

const Value& DirichletCharacter::at(unsigned long residue) const {
    return table_.at(residue % m_);
}

Value DirichletCharacter::operator()(const Int& n) const {
    return table_[mpz_fdiv_ui(n.get_mpz_t(), m_)];
}

std::vector<DirichletCharacter> characters_mod(unsigned long m) {
    if (m == 0) throw Error("bad-character", "modulus must be positive");
    if (m > kModulusCap) throw Error("out-of-range", "character modulus too large");
    std::vector<UnitComponent> comps;
    for (const auto& [p, e] : factorize(Int(m))) comps.push_back(make_component(to_u64(p), e));

    std::vector<DirichletCharacter> out;
    // Exponent tuples in row-major order; each component carries one or two
    // cyclic factors.
    std::vector<unsigned long> radices;
    for (const auto& c : comps) {
        radices.push_back(c.o1);
        if (c.o2 > 1) radices.push_back(c.o2);
    }
    unsigned long total = 1;
    for (unsigned long r : radices) total *= r;
    for (unsigned long j = 0; j < total; ++j) {
        std::vector<unsigned long> exps(radices.size(), 0);
        unsigned long rem = j;
        for (std::size_t i = radices.size(); i-- > 0;) {
            exps[i] = rem % radices[i];
            rem /= radices[i];
        }
        std::vector<Value> table(m, Value::zero());
        for (unsigned long n = 0; n < m; ++n) {
            if (std::gcd(n, m) != 1) continue;
            Value v = Value::one();
            std::size_t slot = 0;
            for (const auto& c : comps) {
                auto [t1, t2] = c.dlog[n % c.pe];
                v = v * Value::root_of_unity(c.o1, (exps[slot] * t1) % c.o1);
                ++slot;
                if (c.o2 > 1) {
                    v = v * Value::root_of_unity(c.o2, (exps[slot] * t2) % c.o2);
                    ++slot;
                }
            }
            table[n] = v;
        }
        out.emplace_back(m, j, std::move(table));
    }
    return out;
}

DirichletCharacter character_mod(unsigned long m, unsigned long index) {
    auto all = characters_mod(m);
    if (index >= all.size()) throw Error("bad-character", "character index out of range");
    return all[index];
}

Value char_eval(const DirichletCharacter& chi, const Int& n) { return chi(n); }

namespace {

unsigned long mock_modulus(const MockCharacter& mc) {
    Int pe = pow_int(static_cast<unsigned long>(mc.base), mc.r);
    if (pe > kModulusCap) throw Error("out-of-range", "base^r too large");
    return to_u64(pe);
}

void check_mock(const MockCharacter& mc) {
    if (mc.base < 2) throw Error("bad-base", "base must be >= 2");
    if (mc.xi.is_zero() || mc.xi.coeff() != 1)
        throw Error("bad-mock", "xi must be a root of unity");
    if (mc.chi.modulus() != mock_modulus(mc))
        throw Error("bad-mock", "character modulus must equal base^r");
}

}  // namespace

Value mock_eval(const MockCharacter& mc, const Int& n) {
    check_mock(mc);
    if (n < 0) throw Error("negative", "mock characters are defined on N");
    if (n == 0) return Value::zero();
    Int rest;
    unsigned long e = nu_p(n, Int(mc.base), &rest);
    return mc.xi.pow(e) * mc.chi(rest);
}

Dfao mock_character_dfao(const MockCharacter& mc) {
    check_mock(mc);
    int k = mc.base;
    unsigned long d = mc.xi.root_den();
    unsigned long modulus = mock_modulus(mc);

    // key: (phase, zeros mod d, digits of unit part consumed, partial residue)
    using Key = std::tuple<int, unsigned long, unsigned long, unsigned long>;
    std::map<Key, int> index;
    std::vector<Key> keys;
    auto intern = [&](const Key& key) {
        auto [it, fresh] = index.emplace(key, static_cast<int>(keys.size()));
        if (fresh) keys.push_back(key);
        return it->second;
    };

    Dfao a;
    a.base = k;
    intern({0, 0, 0, 0});
    for (std::size_t at = 0; at < keys.size(); ++at) {
        Key key = keys[at];
        auto [phase, c, t, rho] = key;
        std::vector<int> row(k, 0);
        for (int digit = 0; digit < k; ++digit) {
            Key next;
            if (phase == 0) {
                if (digit == 0) {
                    next = {0, (c + 1) % d, 0, 0};
                } else if (mc.r == 0) {
                    next = {1, c, 0, 0};
                } else {
                    next = {1, c, 1, static_cast<unsigned long>(digit)};
                }
            } else if (t < mc.r) {
                unsigned long grown = rho + static_cast<unsigned long>(digit) *
                                                powmod_ul(static_cast<unsigned long>(k), t, modulus);
                next = {1, c, t + 1, grown % modulus};
            } else {
                next = key;  // saturated: higher digits cannot change n' mod base^r
            }
            row[digit] = intern(next);
        }
        a.delta.push_back(std::move(row));
    }
    for (const Key& key : keys) {
        auto [phase, c, t, rho] = key;
        if (phase == 0) {
            a.state_names.push_back("z" + std::to_string(c));
            a.output.push_back(Value::zero());
        } else {
            a.state_names.push_back("s" + std::to_string(c) + "_" + std::to_string(t) + "_" +
                                    std::to_string(rho));
            a.output.push_back(mc.xi.pow(c) * mc.chi.at(rho));
        }
    }
    a.initial = 0;
    return a;
}

}  // namespace automult
