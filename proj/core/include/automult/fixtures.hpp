#pragma once

#include <string>
#include <vector>

#include "automult/characters.hpp"
#include "automult/dfao.hpp"

namespace automult {

// Built-in automata the command line and the test suites refer to by name.
struct Fixture {
    std::string name;
    std::string description;
    Dfao dfao;
};

// Deterministic order; built once.
const std::vector<Fixture>& fixtures();

// nullptr when the name is unknown.
const Fixture* find_fixture(const std::string& name);

// Throws "unknown-fixture".
Dfao fixture_dfao(const std::string& name);

// Parameter set behind the mock-* fixtures, for replay against the formula.
MockCharacter mock_parameters(const std::string& name);

// a(n) = 1 when n is a power of the base (1 included), 0 otherwise.
Dfao power_of_base_indicator(int base);

// a(n) = chi(n mod m) read off digit by digit; periodic sequences are
// automatic in any base.
Dfao periodic_character_dfao(const DirichletCharacter& chi, int base);

// Parity of the binary digit sum as +1/-1.
Dfao thue_morse_pm1();

// a(n) = v for every n.
Dfao constant_dfao(int base, const Value& v);

// a(1) = 1 and a(n) = 0 elsewhere.
Dfao one_only_dfao(int base);

}  // namespace automult
