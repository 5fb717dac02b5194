// Acceptance battery: one verdict line per criterion, nonzero exit on any
// failure.  Every check recomputes its expectation independently of the code
// path under test; randomized criteria use fixed seeds.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "automult/characters.hpp"
#include "automult/classify.hpp"
#include "automult/error.hpp"
#include "automult/fixtures.hpp"
#include "automult/ggp.hpp"
#include "automult/ipr.hpp"
#include "automult/numtheory.hpp"
#include "automult/smallgcd.hpp"
#include "automult/vanishing.hpp"
#include "support.hpp"

using namespace automult;
namespace ts = testsupport;

namespace {

// mock fixtures agree with the closed formula on [1, 1e5] and pass the
// coprime multiplicativity scan over the same window
std::string crit1() {
    for (const char* name : {"mock-2-4-pos", "mock-2-4-neg", "mock-3-3-zeta"}) {
        const Dfao& d = fixture_dfao(name);
        MockCharacter mc = mock_parameters(name);
        EvalTable t = build_table(d, 100000);
        for (std::uint64_t n = 1; n <= 100000; ++n)
            if (!(t.at(n) == mock_eval(mc, Int(n))))
                return std::string(name) + ": formula mismatch at n=" + std::to_string(n);
        if (auto bad = check_multiplicative(t, false))
            return std::string(name) + ": coprime counterexample (" + std::to_string(bad->m) +
                   "," + std::to_string(bad->n) + ")";
    }
    return "";
}

// dense replay: classification recovers the inner character exactly and the
// sequence equals it on all of [1, 1e6] coprime to the base
std::string crit2() {
    for (const char* name : {"mock-2-4-pos", "mock-2-4-neg", "mock-3-3-zeta"}) {
        const Dfao& d = fixture_dfao(name);
        MockCharacter mc = mock_parameters(name);
        ClassificationReport r = classify(d, 1000000);
        if (r.mode != ClassificationReport::Mode::Dense)
            return std::string(name) + ": mode is not dense";
        if (r.recovery.kind != CharacterRecovery::Kind::Found || !r.recovery.chi)
            return std::string(name) + ": no character recovered";
        if (r.recovery.modulus != mc.chi.modulus())
            return std::string(name) + ": recovered modulus " + std::to_string(r.recovery.modulus);
        if (!(*r.recovery.chi == mc.chi))
            return std::string(name) + ": recovered table differs from the inner character";
        EvalTable t = build_table(d, 1000000);
        unsigned long m = mc.chi.modulus();
        for (std::uint64_t n = 1; n <= 1000000; ++n) {
            if (std::gcd(n, static_cast<std::uint64_t>(d.base)) != 1) continue;
            if (!(t.at(n) == mc.chi.at(n % m)))
                return std::string(name) + ": a(n) != chi(n) at n=" + std::to_string(n);
        }
    }
    return "";
}

// sparse replay: power indicators classify as one geometric progression and
// the cover equals the support on [0, 1e6]
std::string crit3() {
    for (const char* name : {"power-of-2", "power-of-3"}) {
        const Dfao& d = fixture_dfao(name);
        ClassificationReport r = classify(d, 1000000);
        if (r.mode != ClassificationReport::Mode::Sparse)
            return std::string(name) + ": mode is not sparse";
        if (r.progressions.size() != 1 || r.progressions[0].x != 1 || r.progressions[0].c != 1 ||
            r.progressions[0].degenerate())
            return std::string(name) + ": progression list is not [(1,1)]";
        std::set<std::uint64_t> cover;
        for (const Int& e : progression_elements(r.progressions[0], d.base, Int(1000000)))
            cover.insert(e.get_ui());
        std::vector<std::uint64_t> sup = support(d, 1000000);
        if (cover != std::set<std::uint64_t>(sup.begin(), sup.end()))
            return std::string(name) + ": cover does not equal the support";
    }
    return "";
}

// non-multiplicative input is rejected with a small counterexample
std::string crit4() {
    ClassificationReport r = classify(fixture_dfao("thue-morse"), 1000000);
    if (r.mode != ClassificationReport::Mode::Inconclusive || r.multiplicative)
        return "thue-morse was not rejected";
    if (!r.counterexample) return "no counterexample reported";
    if (r.counterexample->m * r.counterexample->n > 6)
        return "counterexample product " +
               std::to_string(r.counterexample->m * r.counterexample->n) + " exceeds 6";
    return "";
}

// residue spread of randomized incomplete-product sets
std::string crit5() {
    auto g = ts::rng(505);
    for (int iter = 0; iter < 200; ++iter) {
        unsigned long m = ts::pick(g, 2, 50);
        std::size_t r = ts::pick(g, 1, 6);
        IprSet s;
        s.n0 = Int(ts::pick(g, 0, 50));
        for (std::size_t i = 0; i < r; ++i) {
            unsigned long side;
            do side = ts::pick(g, 1, 200); while (std::gcd(side, m) != 1);
            s.sides.push_back(Int(side));
        }
        std::size_t spread = ipr_residues(s, m).size();
        if (spread < std::min<std::size_t>(m, r + 1))
            return "instance " + std::to_string(iter) + ": spread " + std::to_string(spread) +
                   " below min(" + std::to_string(m) + "," + std::to_string(r + 1) + ")";
    }
    return "";
}

// randomized encodings reconstruct bit-exactly, align every exponent and
// stay nondegenerate when no coefficient vanishes
std::string crit6() {
    auto g = ts::rng(606);
    const int bases[] = {2, 3, 10};
    int done = 0, attempts = 0;
    while (done < 100) {
        if (++attempts > 5000) return "instance generation stalled";
        int k = bases[ts::pick(g, 0, 2)];
        std::size_t r = ts::pick(g, 1, 3);
        Ggp ggp;
        ggp.base = k;
        long head = static_cast<long>(ts::pick(g, 1, 9)) * (ts::pick(g, 0, 1) ? 1 : -1);
        ggp.coeffs.push_back(Rat(head));
        for (std::size_t i = 0; i < r; ++i) {
            long num = static_cast<long>(ts::pick(g, 1, 9)) * (ts::pick(g, 0, 1) ? 1 : -1);
            unsigned long e = ts::pick(g, 0, k == 10 ? 1 : 2);  // denominators stay <= 12
            Rat q(Int(num), ts::pow_oracle(k, e));
            q.canonicalize();
            ggp.coeffs.push_back(q);
        }
        unsigned long C = ggp_constants(ggp).C;
        std::vector<unsigned long> alphas;
        unsigned long at = 0;
        for (std::size_t i = 0; i < r; ++i) {
            at += C + ts::pick(g, 0, 3);  // spacing >= C, sometimes exactly C
            alphas.push_back(at);
        }
        Rat sum = ggp_value(ggp, alphas);
        if (sum.get_den() != 1 || sum == 0) continue;  // resample toward valid encodings
        if (sum < 0) {
            for (Rat& q : ggp.coeffs) q = -q;
            sum = -sum;
        }
        Int value(sum.get_num());
        GgpEncoding enc = ggp_encode(ggp, alphas);
        if (enc.value != value) return "reconstructed value differs";
        // reassemble the digit blocks and compare bit for bit
        std::vector<DigitWord> blocks{enc.u.back()};
        for (std::size_t i = enc.v.size(); i >= 1; --i) {
            blocks.push_back(ts::repeat_oracle(enc.v[i - 1], enc.l[i - 1]));
            blocks.push_back(enc.u[i - 1]);
        }
        if (ts::word_value_oracle(ts::join(k, blocks)) != value)
            return "assembled word does not spell the value";
        for (std::size_t i = 1; i <= enc.v.size(); ++i) {
            unsigned long pumped = 0;
            for (std::size_t j = 0; j < i; ++j) pumped += enc.l[j];
            long diff = static_cast<long>(alphas[i - 1]) -
                        static_cast<long>(enc.B * (pumped + 3 * i - 1));
            if (diff < 0 || diff >= static_cast<long>(enc.B))
                return "alignment fails at exponent " + std::to_string(i);
        }
        if (!nondegenerate(enc)) return "degenerate encoding with all coefficients nonzero";
        ++done;
    }
    return "";
}

// divisor-bound certificates: constants factor and the valuation bound holds
// along ten stride multiples for every prime up to 50
std::string crit7() {
    auto g = ts::rng(707);
    std::vector<Int> primes;
    for (std::uint64_t p : sieve(50)) primes.push_back(Int(p));
    const int bases[] = {2, 3, 10};
    for (int iter = 0; iter < 50; ++iter) {
        int k = bases[iter % 3];
        auto nonzero_word = [&](std::size_t len) {
            DigitWord w = ts::random_word(g, k, len);
            while (ts::word_value_oracle(w) == 0) w = ts::random_word(g, k, len);
            return w;
        };
        DigitWord w = nonzero_word(ts::pick(g, 1, 3));
        DigitWord v = ts::random_word(g, k, ts::pick(g, 1, 3));
        DigitWord u = nonzero_word(ts::pick(g, 1, 3));
        SmallGcdCertificate cert = small_gcd_certificate(w, v, u, primes);
        if (cert.d != cert.d0 * cert.d1) return "D != D0 * D1";
        if (cert.entries.size() != primes.size()) return "certificate misses primes";
        for (const auto& e : cert.entries) {
            if (e.nu_d != nu_p(cert.d, e.p)) return "stored valuation is wrong";
            unsigned long q = e.q.get_ui();
            if (q == 0) return "stride is zero";
            for (unsigned long s = 1; s <= 10; ++s) {
                Int member = pumped_value(w, v, u, q * s);
                if (nu_p(member, e.p) > e.nu_d)
                    return "valuation bound fails at p=" + e.p.get_str() + " l=" +
                           std::to_string(q * s);
            }
        }
    }
    return "";
}

// constructed vanishing sums split into zero-sum groups of small diameter;
// non-vanishing inputs are rejected
std::string crit8() {
    auto g = ts::rng(808);
    for (int iter = 0; iter < 30; ++iter) {
        const int bases[] = {2, 3, 10};
        int k = bases[ts::pick(g, 0, 2)];
        unsigned long C = 6;
        std::size_t pairs = ts::pick(g, 1, 4);  // r = 2 * pairs <= 8
        std::vector<Rat> x;
        std::vector<unsigned long> alpha;
        unsigned long at = ts::pick(g, 0, 3);
        for (std::size_t p = 0; p < pairs; ++p) {
            long c = static_cast<long>(ts::pick(g, 1, 9)) * (ts::pick(g, 0, 1) ? 1 : -1);
            unsigned long delta = ts::pick(g, 1, C - 1);
            x.push_back(Rat(c));
            alpha.push_back(at + delta);
            x.push_back(Rat(-c) * Rat(ts::pow_oracle(k, delta)));
            alpha.push_back(at);
            at += 2 * C + 5 + ts::pick(g, 0, 10);  // pairs never share a window
        }
        auto got = vanishing_partition(x, alpha, k, C);
        if (!got) return "no partition found for a constructed instance";
        if (got->size() != pairs) return "partition does not split into the pairs";
        std::set<std::size_t> seen;
        for (const VanishingGroup& grp : *got) {
            Rat sum = 0;
            unsigned long lo = alpha[grp.indices.front() - 1], hi = lo;
            for (std::size_t idx : grp.indices) {
                if (!seen.insert(idx).second) return "index assigned twice";
                sum += x[idx - 1] * Rat(ts::pow_oracle(k, alpha[idx - 1]));
                lo = std::min(lo, alpha[idx - 1]);
                hi = std::max(hi, alpha[idx - 1]);
            }
            if (sum != 0) return "group sum is nonzero";
            if (hi - lo >= C) return "group diameter reaches C";
        }
        if (seen.size() != x.size()) return "partition is not a cover";

        std::vector<Rat> bad = x;
        bad[0] += 1;
        bool rejected = false;
        try {
            vanishing_partition(bad, alpha, k, C);
        } catch (const Error&) {
            rejected = true;
        }
        if (!rejected) return "non-vanishing input was not rejected";
    }
    return "";
}

// kernel bound and witness replay on every fixture
std::string crit9() {
    for (const Fixture& f : fixtures()) {
        std::vector<KernelElement> kern = k_kernel(f.dfao);
        if (kern.size() > static_cast<std::size_t>(f.dfao.size()))
            return f.name + ": kernel exceeds the state count";
        for (const KernelElement& e : kern) {
            Dfao sub = f.dfao.with_initial(e.state);
            Int scale = ts::pow_oracle(f.dfao.base, e.alpha);
            for (std::uint64_t n = 1; n <= 10000; ++n)
                if (!(sub.eval_u64(n) == f.dfao.eval(scale * n + e.r)))
                    return f.name + ": witness (" + std::to_string(e.alpha) + "," +
                           e.r.get_str() + ") fails at n=" + std::to_string(n);
        }
    }
    return "";
}

// prime power behavior of the xi = -1 mock: geometric ratio -1 with tail
// period 2 at p=3, and xi powers straight down the p=2 column
std::string crit10() {
    const Dfao& d = fixture_dfao("mock-2-4-neg");
    PrimePowerProfile p3 = prime_power_profile(d, 3, 100);
    if (!p3.geometric || !(p3.ratio == Value::integer(-1))) return "p=3 ratio is not -1";
    if (!p3.periodicity || p3.periodicity->first != 0 || p3.periodicity->second != 2)
        return "p=3 tail is not (0,2)-periodic";
    if (p3.values.size() != 101) return "p=3 profile is short";
    if (!(p3.values[100] == d.eval(ts::pow_oracle(3, 100))))
        return "p=3 profile disagrees with direct evaluation of 3^100";
    PrimePowerProfile p2 = prime_power_profile(d, 2, 100);
    if (!p2.divides_base) return "p=2 should divide the base";
    for (unsigned long a = 0; a <= 100; ++a) {
        Value expect = a % 2 ? Value::integer(-1) : Value::one();  // xi^a
        if (!(p2.values[a] == expect)) return "p=2 profile is not xi^alpha";
    }
    return "";
}

// growth dichotomy with witness replay on random pump mixes
std::string crit11() {
    for (const char* name : {"power-of-2", "power-of-3"}) {
        GrowthAnalysis ga = support_growth(fixture_dfao(name));
        if (ga.kind != GrowthAnalysis::Kind::Polynomial)
            return std::string(name) + ": support growth is not polynomial";
    }
    auto g = ts::rng(1111);
    for (const char* name : {"mock-2-4-pos", "mock-2-4-neg", "mock-3-3-zeta"}) {
        const Dfao& d = fixture_dfao(name);
        GrowthAnalysis ga = support_growth(d);
        if (ga.kind != GrowthAnalysis::Kind::Exponential)
            return std::string(name) + ": support growth is not exponential";
        if (!ga.witness) return std::string(name) + ": no witness attached";
        const ExponentialWitness& w = *ga.witness;
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t len = ts::pick(g, 0, 12);
            std::vector<DigitWord> blocks{w.w};
            for (std::size_t j = 0; j < len; ++j)
                blocks.push_back(ts::pick(g, 0, 1) ? w.v2 : w.v1);
            blocks.push_back(w.u);
            Int n = ts::word_value_oracle(ts::join(d.base, blocks));
            if (!(d.eval(n) == w.constant))
                return std::string(name) + ": witness replay fails on a random mix";
        }
    }
    return "";
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        double limit_seconds;  // 0 = no gate
        std::string (*run)();
    };
    const Criterion table[] = {
        {1, 30.0, crit1}, {2, 60.0, crit2}, {3, 0.0, crit3}, {4, 0.0, crit4},
        {5, 0.0, crit5},  {6, 0.0, crit6},  {7, 0.0, crit7}, {8, 0.0, crit8},
        {9, 0.0, crit9},  {10, 0.0, crit10}, {11, 0.0, crit11},
    };
    int failures = 0;
    for (const Criterion& c : table) {
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (detail.empty() && c.limit_seconds > 0 && secs > c.limit_seconds) {
            std::ostringstream os;
            os << "took " << secs << " s, limit " << c.limit_seconds << " s";
            detail = os.str();
        }
        std::ostringstream line;
        line << "criterion " << c.number << ": " << (detail.empty() ? "PASS" : "FAIL");
        if (!detail.empty()) line << " (" << detail << ")";
        if (c.limit_seconds > 0 && detail.empty())
            line << " [" << static_cast<int>(secs * 10) / 10.0 << " s]";
        std::cout << line.str() << std::endl;
        if (!detail.empty()) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
