#include <doctest.h>

#include <bit>
#include <set>

#include "automult/characters.hpp"
#include "automult/error.hpp"
#include "automult/fixtures.hpp"
#include "support.hpp"

using namespace automult;
namespace ts = testsupport;

TEST_CASE("registry names and lookup") {
    std::vector<std::string> expect = {"mock-2-4-pos", "mock-2-4-neg", "mock-3-3-zeta",
                                       "power-of-2",   "power-of-3",   "char-5-base-3",
                                       "thue-morse",   "ones-2",       "zero-2",
                                       "one-only-2"};
    const auto& all = fixtures();
    REQUIRE(all.size() == expect.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].name == expect[i]);
        CHECK(!all[i].description.empty());
        CHECK(find_fixture(all[i].name) == &all[i]);
    }
    CHECK(find_fixture("missing") == nullptr);
    CHECK_THROWS_AS(fixture_dfao("missing"), Error);
}

TEST_CASE("thue-morse outputs follow digit-sum parity") {
    Dfao d = fixture_dfao("thue-morse");
    CHECK(d.size() == 2);
    for (std::uint64_t n = 0; n < 10000; ++n) {
        Value expect = std::popcount(n) % 2 == 0 ? Value::one() : Value::integer(-1);
        CHECK(d.eval_u64(n) == expect);
    }
}

TEST_CASE("power indicators accept exactly the powers") {
    for (int k : {2, 3}) {
        Dfao d = fixture_dfao(k == 2 ? "power-of-2" : "power-of-3");
        std::set<std::uint64_t> powers;
        for (Int p = 1; p <= 100000; p *= k) powers.insert(to_u64(p, "power"));
        for (std::uint64_t n = 0; n <= 100000; ++n)
            CHECK(d.eval_u64(n) == (powers.count(n) ? Value::one() : Value::zero()));
    }
}

TEST_CASE("constant and near-constant machines") {
    Dfao ones = fixture_dfao("ones-2");
    Dfao zero = fixture_dfao("zero-2");
    Dfao one_only = fixture_dfao("one-only-2");
    CHECK(ones.size() == 1);
    CHECK(zero.size() == 1);
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        CHECK(ones.eval_u64(n) == Value::one());
        CHECK(zero.eval_u64(n) == Value::zero());
        CHECK(one_only.eval_u64(n) == (n == 1 ? Value::one() : Value::zero()));
    }
}

TEST_CASE("lifted character agrees with the character table") {
    Dfao d = fixture_dfao("char-5-base-3");
    DirichletCharacter chi = character_mod(5, 1);
    for (std::uint64_t n = 0; n <= 3000; ++n)
        CHECK(d.eval_u64(n) == char_eval(chi, Int(static_cast<unsigned long>(n))));
}

TEST_CASE("mock parameters rebuild their fixtures") {
    for (const char* name : {"mock-2-4-pos", "mock-2-4-neg", "mock-3-3-zeta"}) {
        MockCharacter mc = mock_parameters(name);
        Dfao rebuilt = mock_character_dfao(mc);
        Dfao d = fixture_dfao(name);
        CHECK(rebuilt.base == d.base);
        for (std::uint64_t n = 0; n <= 5000; ++n) CHECK(rebuilt.eval_u64(n) == d.eval_u64(n));
    }
    CHECK(mock_parameters("mock-2-4-pos").xi == Value::one());
    CHECK(mock_parameters("mock-2-4-neg").xi == Value::integer(-1));
    CHECK(mock_parameters("mock-3-3-zeta").xi == Value::root_of_unity(3, 1));
    CHECK_THROWS_AS(mock_parameters("thue-morse"), Error);
}

TEST_CASE("mock machines agree with the closed formula") {
    for (const char* name : {"mock-2-4-pos", "mock-2-4-neg", "mock-3-3-zeta"}) {
        MockCharacter mc = mock_parameters(name);
        Dfao d = fixture_dfao(name);
        for (std::uint64_t n = 0; n <= 10000; ++n)
            CHECK(d.eval_u64(n) == mock_eval(mc, Int(static_cast<unsigned long>(n))));
    }
}

TEST_CASE("mock state counts scale with modulus and sign tracking") {
    CHECK(fixture_dfao("mock-2-4-pos").size() == 4);
    CHECK(fixture_dfao("mock-2-4-neg").size() == 8);
    CHECK(fixture_dfao("mock-3-3-zeta").size() == 9);
}
