#include "automult/fixtures.hpp"

#include <map>

#include "automult/error.hpp"

namespace automult {

Dfao power_of_base_indicator(int base) {
    // z: only zeros so far, o: exactly one 1, d: dead
    Dfao d;
    d.base = base;
    d.state_names = {"z", "o", "d"};
    d.initial = 0;
    d.delta.assign(3, std::vector<int>(base, 2));
    d.delta[0][0] = 0;
    d.delta[0][1] = 1;
    d.delta[1][0] = 1;
    d.output = {Value::zero(), Value::one(), Value::zero()};
    return d;
}

Dfao periodic_character_dfao(const DirichletCharacter& chi, int base) {
    const unsigned long m = chi.modulus();
    const unsigned long k = static_cast<unsigned long>(base);
    // powers of the base mod m, folded into their eventual cycle
    std::vector<unsigned long> pows;
    std::map<unsigned long, std::size_t> seen;
    unsigned long cur = 1 % m;
    while (!seen.count(cur)) {
        seen[cur] = pows.size();
        pows.push_back(cur);
        cur = cur * (k % m) % m;
    }
    const std::size_t L = pows.size();
    const std::size_t entry = seen[cur];
    auto id = [&](unsigned long res, std::size_t i) {
        return static_cast<int>(res * L + i);
    };
    Dfao d;
    d.base = base;
    d.initial = id(0, 0);
    for (unsigned long res = 0; res < m; ++res)
        for (std::size_t i = 0; i < L; ++i) {
            d.state_names.push_back("r" + std::to_string(res) + "_" + std::to_string(i));
            std::vector<int> row(k);
            std::size_t next = i + 1 < L ? i + 1 : entry;
            for (unsigned long dig = 0; dig < k; ++dig)
                row[dig] = id((res + dig * pows[i]) % m, next);
            d.delta.push_back(row);
            d.output.push_back(chi.at(res));
        }
    return d;
}

Dfao thue_morse_pm1() {
    Dfao d;
    d.base = 2;
    d.state_names = {"even", "odd"};
    d.initial = 0;
    d.delta = {{0, 1}, {1, 0}};
    d.output = {Value::one(), Value::root_of_unity(2, 1)};
    return d;
}

Dfao constant_dfao(int base, const Value& v) {
    Dfao d;
    d.base = base;
    d.state_names = {"c"};
    d.initial = 0;
    d.delta.assign(1, std::vector<int>(base, 0));
    d.output = {v};
    return d;
}

Dfao one_only_dfao(int base) {
    // start, the digit 1 in the lowest place, dead
    Dfao d;
    d.base = base;
    d.state_names = {"s", "p", "d"};
    d.initial = 0;
    d.delta.assign(3, std::vector<int>(base, 2));
    d.delta[0][1] = 1;
    d.delta[1][0] = 1;
    d.output = {Value::zero(), Value::one(), Value::zero()};
    return d;
}

MockCharacter mock_parameters(const std::string& name) {
    if (name == "mock-2-4-pos")
        return MockCharacter{2, 2, character_mod(4, 1), Value::one()};
    if (name == "mock-2-4-neg")
        return MockCharacter{2, 2, character_mod(4, 1), Value::root_of_unity(2, 1)};
    if (name == "mock-3-3-zeta")
        return MockCharacter{3, 1, character_mod(3, 1), Value::root_of_unity(3, 1)};
    throw Error("unknown-fixture", "no mock parameters under the name " + name);
}

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = [] {
        std::vector<Fixture> f;
        f.push_back({"mock-2-4-pos", "xi = 1 on powers of 2, chi(4,1) on the odd part",
                     mock_character_dfao(mock_parameters("mock-2-4-pos"))});
        f.push_back({"mock-2-4-neg", "xi = -1 on powers of 2, chi(4,1) on the odd part",
                     mock_character_dfao(mock_parameters("mock-2-4-neg"))});
        f.push_back({"mock-3-3-zeta", "xi = zeta(3,1) on powers of 3, chi(3,1) on the rest",
                     mock_character_dfao(mock_parameters("mock-3-3-zeta"))});
        f.push_back({"power-of-2", "indicator of the powers of 2", power_of_base_indicator(2)});
        f.push_back({"power-of-3", "indicator of the powers of 3", power_of_base_indicator(3)});
        f.push_back({"char-5-base-3", "chi(5,1) as a periodic sequence over base-3 digits",
                     periodic_character_dfao(character_mod(5, 1), 3)});
        f.push_back({"thue-morse", "+1/-1 by parity of the binary digit sum", thue_morse_pm1()});
        f.push_back({"ones-2", "constant 1 in base 2", constant_dfao(2, Value::one())});
        f.push_back({"zero-2", "constant 0 in base 2", constant_dfao(2, Value::zero())});
        f.push_back({"one-only-2", "1 at n = 1 and 0 elsewhere", one_only_dfao(2)});
        return f;
    }();
    return all;
}

const Fixture* find_fixture(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (f.name == name) return &f;
    return nullptr;
}

Dfao fixture_dfao(const std::string& name) {
    const Fixture* f = find_fixture(name);
    if (!f) throw Error("unknown-fixture", name);
    return f->dfao;
}

}  // namespace automult
