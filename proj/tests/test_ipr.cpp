#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "automult/error.hpp"
#include "automult/ipr.hpp"
#include "support.hpp"

using namespace automult;
namespace ts = testsupport;

namespace {

// Subset-sum enumeration, the definition itself.
std::set<Int> elements_oracle(const IprSet& a) {
    std::set<Int> out;
    std::size_t r = a.sides.size();
    for (std::uint64_t mask = 0; mask < (1ull << r); ++mask) {
        Int s = a.n0;
        for (std::size_t i = 0; i < r; ++i)
            if ((mask >> i) & 1) s += a.sides[i];
        out.insert(s);
    }
    return out;
}

}  // namespace

TEST_CASE("validation") {
    CHECK_THROWS_AS(check_ipr(IprSet{Int(0), {Int(0)}}), Error);
    CHECK_THROWS_AS(check_ipr(IprSet{Int(0), {Int(-2)}}), Error);
    CHECK_THROWS_AS(check_ipr(IprSet{Int(-5), {Int(1)}}), Error);
    CHECK_NOTHROW(check_ipr(IprSet{Int(5), {Int(1), Int(7)}}));
}

TEST_CASE("worked residue example") {
    IprSet a{Int(0), {Int(1), Int(2)}};
    CHECK(ipr_residues(a, 5) == std::vector<unsigned long>{0, 1, 2, 3});
}

TEST_CASE("elements and residues agree with subset enumeration") {
    auto g = ts::rng(601);
    for (int iter = 0; iter < 200; ++iter) {
        IprSet a;
        a.n0 = Int(static_cast<unsigned long>(ts::pick(g, 0, 200)));
        std::size_t r = ts::pick(g, 0, 8);
        for (std::size_t i = 0; i < r; ++i)
            a.sides.push_back(Int(static_cast<unsigned long>(ts::pick(g, 1, 500))));

        std::set<Int> expect = elements_oracle(a);
        std::vector<Int> got = ipr_elements(a);
        CHECK(std::set<Int>(got.begin(), got.end()) == expect);
        CHECK(std::is_sorted(got.begin(), got.end()));

        unsigned long m = ts::pick(g, 1, 60);
        std::set<unsigned long> res_expect;
        for (const Int& e : expect) {
            Int red = e % static_cast<unsigned long>(m);
            if (red < 0) red += static_cast<unsigned long>(m);
            res_expect.insert(to_u64(red, "residue"));
        }
        std::vector<unsigned long> res = ipr_residues(a, m);
        CHECK(std::is_sorted(res.begin(), res.end()));
        CHECK(std::set<unsigned long>(res.begin(), res.end()) == res_expect);
    }
}

TEST_CASE("coprime sidelengths spread residues") {
    auto g = ts::rng(602);
    for (int iter = 0; iter < 60; ++iter) {
        unsigned long m = ts::pick(g, 2, 50);
        std::size_t r = ts::pick(g, 1, 6);
        IprSet a;
        a.n0 = Int(static_cast<unsigned long>(ts::pick(g, 0, 1000)));
        for (std::size_t i = 0; i < r; ++i) {
            unsigned long s = 0;
            do
                s = ts::pick(g, 1, 1000);
            while (std::gcd(s, m) != 1);
            a.sides.push_back(Int(s));
        }
        CHECK(ipr_residues(a, m).size() >= std::min<std::size_t>(m, r + 1));
    }
}

TEST_CASE("high ranks need the residue path") {
    IprSet big;
    big.n0 = 3;
    for (int i = 0; i < 25; ++i) big.sides.push_back(Int(i + 1));
    CHECK_THROWS_AS(ipr_elements(big), Error);  // enumeration capped at rank 20
    CHECK(!ipr_residues(big, 7).empty());       // sumset residues still fine
}
