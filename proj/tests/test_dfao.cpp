#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "automult/dfao.hpp"
#include "automult/dfao_io.hpp"
#include "automult/error.hpp"
#include "automult/fixtures.hpp"
#include "support.hpp"

using namespace automult;
namespace ts = testsupport;

namespace {

Dfao two_state_invalid() {
    Dfao d;
    d.base = 2;
    d.state_names = {"a", "b"};
    d.initial = 0;
    d.delta = {{1, 0}, {1, 1}};
    d.output = {Value::one(), Value::zero()};  // delta_0 changes the output of a
    return d;
}

}  // namespace

TEST_CASE("fixture automata validate") {
    for (const Fixture& f : fixtures()) {
        ValidationResult r = validate(f.dfao);
        CHECK(r.ok);
        CHECK(r.errors.empty());
    }
}

TEST_CASE("validation rejects structural defects") {
    CHECK(!validate(two_state_invalid()).ok);

    Dfao d = fixture_dfao("thue-morse");
    Dfao bad = d;
    bad.initial = 5;
    CHECK(!validate(bad).ok);

    bad = d;
    bad.delta[0][1] = 9;
    CHECK(!validate(bad).ok);

    bad = d;
    bad.output.pop_back();
    CHECK(!validate(bad).ok);

    bad = d;
    bad.base = 1;
    CHECK(!validate(bad).ok);

    // a perfect-power base is legal but flagged
    Dfao sq = fixture_dfao("thue-morse");
    sq.base = 4;
    sq.delta = {{0, 1, 1, 0}, {1, 0, 0, 1}};
    ValidationResult r = validate(sq);
    CHECK(r.ok);
    CHECK(!r.warnings.empty());
}

TEST_CASE("eval agrees across entry points and padding") {
    auto g = ts::rng(301);
    for (const char* name : {"mock-2-4-neg", "mock-3-3-zeta", "char-5-base-3", "thue-morse"}) {
        Dfao d = fixture_dfao(name);
        for (int iter = 0; iter < 300; ++iter) {
            std::uint64_t n = ts::pick(g, 0, 1u << 20);
            Value v = d.eval(Int(static_cast<unsigned long>(n)));
            CHECK(v == d.eval_u64(n));
            CHECK(v == d.output[d.run_u64(n)]);
            CHECK(v == d.output[d.run_int(Int(static_cast<unsigned long>(n)))]);
            // leading zeros never matter
            for (std::size_t extra = 1; extra <= 3; ++extra) {
                DigitWord padded =
                    padded_suffix(Int(static_cast<unsigned long>(n)), d.base,
                                  digit_length(Int(static_cast<unsigned long>(n)), d.base) + extra);
                CHECK(d.output[d.run_word(padded, d.initial)] == v);
            }
        }
    }
}

TEST_CASE("with_initial relocates the start state") {
    Dfao d = fixture_dfao("mock-2-4-neg");
    for (int s = 0; s < d.size(); ++s) {
        Dfao moved = d.with_initial(s);
        CHECK(moved.initial == s);
        CHECK(moved.output[moved.run_u64(5)] == d.output[d.run_word(int_to_word(Int(5), 2), s)]);
    }
}

TEST_CASE("transition maps compose contravariantly on concatenation") {
    auto g = ts::rng(302);
    for (const char* name : {"mock-3-3-zeta", "thue-morse"}) {
        Dfao d = fixture_dfao(name);
        for (int iter = 0; iter < 200; ++iter) {
            DigitWord u = ts::random_word(g, d.base, ts::pick(g, 0, 8));
            DigitWord v = ts::random_word(g, d.base, ts::pick(g, 0, 8));
            StateMap lhs = transition_of_word(d, concat(u, v));
            StateMap rhs = compose(transition_of_word(d, u), transition_of_word(d, v));
            CHECK(lhs.map == rhs.map);
        }
    }
}

TEST_CASE("transition monoid is closed and witnessed") {
    for (const char* name : {"mock-2-4-pos", "thue-morse", "power-of-2"}) {
        Dfao d = fixture_dfao(name);
        std::vector<StateMap> mon = transition_monoid(d);
        CHECK(!mon.empty());
        CHECK(mon[0].map == identity_map(d).map);
        std::set<std::vector<int>> seen;
        for (const StateMap& f : mon) {
            CHECK(seen.insert(f.map).second);  // distinct elements
            CHECK(transition_of_word(d, f.witness).map == f.map);
        }
        for (const StateMap& f : mon)
            for (const StateMap& h : mon) CHECK(seen.count(compose(f, h).map) == 1);
    }
}

TEST_CASE("idempotent exponent squares every monoid element to itself") {
    for (const char* name : {"mock-2-4-neg", "char-5-base-3"}) {
        Dfao d = fixture_dfao(name);
        unsigned long m = to_u64(idempotent_exponent(d), "exponent");
        CHECK(m >= 1);
        for (const StateMap& f : transition_monoid(d)) {
            StateMap fm = identity_map(d);
            for (unsigned long i = 0; i < m; ++i) fm = compose(f, fm);
            StateMap f2m = fm;
            for (unsigned long i = 0; i < m; ++i) f2m = compose(f, f2m);
            CHECK(f2m.map == fm.map);
        }
    }
}

TEST_CASE("kernel is small, closed, and every witness replays") {
    for (const Fixture& fx : fixtures()) {
        const Dfao& d = fx.dfao;
        std::vector<KernelElement> kernel = k_kernel(d);
        CHECK(kernel.size() <= static_cast<std::size_t>(d.size()));
        CHECK(kernel[0].alpha == 0);
        CHECK(kernel[0].r == 0);
        CHECK(kernel[0].state == d.initial);

        std::set<int> states;
        for (const KernelElement& e : kernel) states.insert(e.state);
        for (const KernelElement& e : kernel) {
            // witness replay on a small window (the acceptance run goes deeper)
            Dfao shifted = d.with_initial(e.state);
            Int scale = ts::pow_oracle(d.base, e.alpha);
            for (std::uint64_t n = 1; n <= 300; ++n) {
                Int arg = scale * static_cast<unsigned long>(n) + e.r;
                CHECK(shifted.eval(Int(static_cast<unsigned long>(n))) == d.eval(arg));
            }
            // closure: one more digit of shift lands on a kernel state
            for (int digit = 0; digit < d.base; ++digit)
                CHECK(states.count(d.step(e.state, digit)) == 1);
        }
    }
}

TEST_CASE("kernel shift pair replays as an eval identity") {
    for (const char* name : {"mock-2-4-neg", "mock-3-3-zeta", "power-of-2", "char-5-base-3"}) {
        Dfao d = fixture_dfao(name);
        auto [beta, gamma] = kernel_shift_pair(d);
        CHECK(beta < gamma);
        CHECK(gamma <= static_cast<unsigned long>(d.size()) + 1);
        Int pb = ts::pow_oracle(d.base, beta), pg = ts::pow_oracle(d.base, gamma);
        for (std::uint64_t n = 1; n <= 2000; ++n) {
            Int m(static_cast<unsigned long>(n));
            CHECK(d.eval(Int(pb * m + 1)) == d.eval(Int(pg * m + 1)));
        }
    }
}

TEST_CASE("integer equivalence is exact under any further padding") {
    Dfao d = fixture_dfao("mock-2-4-neg");
    auto g = ts::rng(303);
    CHECK(int_equiv(d, Int(7), Int(7)));
    int found = 0;
    for (int iter = 0; iter < 4000 && found < 12; ++iter) {
        Int n1(static_cast<unsigned long>(ts::pick(g, 0, 800)));
        Int n2(static_cast<unsigned long>(ts::pick(g, 0, 800)));
        if (!int_equiv(d, n1, n2)) continue;
        ++found;
        std::size_t L = std::max(digit_length(n1, d.base), digit_length(n2, d.base));
        // equal actions mean equal evals under every more-significant prefix
        for (std::uint64_t m = 0; m <= 40; ++m) {
            Int shift = ts::pow_oracle(d.base, L) * static_cast<unsigned long>(m);
            CHECK(d.eval(Int(n1 + shift)) == d.eval(Int(n2 + shift)));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("equivalent pair search returns a compatible pair or exhausts") {
    Dfao d = fixture_dfao("mock-2-4-neg");
    auto [n1, n2] = equiv_pair_search(d, Int(3), 100000);
    CHECK(n1 < n2);
    CHECK((n2 - n1) % 3 != 0);
    CHECK(int_equiv(d, n1, n2));
    CHECK(int_equiv(d, Int(3 * n1), Int(3 * n2)));
    // bound 1 leaves only {0,1}, whose class pairs differ
    CHECK_THROWS_AS(equiv_pair_search(fixture_dfao("thue-morse"), Int(2), 1), Error);
    // at bound 2 the words of 1 and 2 both act as the swap, so a pair exists
    auto [t1, t2] = equiv_pair_search(fixture_dfao("thue-morse"), Int(2), 2);
    CHECK(t1 < t2);
    CHECK(t2 <= 2);
    CHECK((t2 - t1) % 2 != 0);
    CHECK(int_equiv(fixture_dfao("thue-morse"), Int(2 * t1), Int(2 * t2)));
}

TEST_CASE("file format round trips and hashes pin the machine") {
    for (const Fixture& fx : fixtures()) {
        std::string text = dfao_to_string(fx.dfao);
        Dfao back = dfao_from_string(text);
        CHECK(back.base == fx.dfao.base);
        CHECK(back.state_names == fx.dfao.state_names);
        CHECK(back.initial == fx.dfao.initial);
        CHECK(back.delta == fx.dfao.delta);
        CHECK(back.output == fx.dfao.output);
        CHECK(dfao_hash(back) == dfao_hash(fx.dfao));
    }
    // the hash is sensitive to any semantic field
    Dfao d = fixture_dfao("thue-morse");
    std::string h = dfao_hash(d);
    Dfao mod = d;
    mod.output[1] = Value::integer(5);
    CHECK(dfao_hash(mod) != h);
    mod = d;
    mod.delta[0][0] = 1;
    CHECK(dfao_hash(mod) != h);
}

TEST_CASE("file i/o surfaces errors as exit-worthy exceptions") {
    CHECK_THROWS_AS(load_dfao("/nonexistent/automaton.json"), Error);
    CHECK_THROWS_AS(dfao_from_string("not json at all"), Error);
    CHECK_THROWS_AS(dfao_from_string("{\"format\":\"automult.dfao/1\"}"), Error);

    std::string path = "roundtrip_tmp.dfao";
    Dfao d = fixture_dfao("mock-3-3-zeta");
    save_dfao(d, path);
    Dfao back = load_dfao(path);
    CHECK(dfao_hash(back) == dfao_hash(d));
    std::remove(path.c_str());
}
