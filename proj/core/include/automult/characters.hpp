#pragma once

#include <string>
#include <vector>

#include "automult/bigint.hpp"
#include "automult/dfao.hpp"
#include "automult/value.hpp"

namespace automult {

// Completely multiplicative map on residues mod m, zero off the units.
// Characters compare equal exactly when modulus and value table agree.
class DirichletCharacter {
  public:
    DirichletCharacter();  // principal character mod 1
    DirichletCharacter(unsigned long modulus, unsigned long index, std::vector<Value> table);

    unsigned long modulus() const { return m_; }
    unsigned long index() const { return index_; }
    unsigned long order() const { return order_; }
    bool principal() const;
    std::string label() const;

    const Value& at(unsigned long residue) const;
    Value operator()(const Int& n) const;

    bool operator==(const DirichletCharacter& o) const {
        return m_ == o.m_ && table_ == o.table_;
    }

  private:
    unsigned long m_ = 1;
    unsigned long index_ = 0;
    unsigned long order_ = 1;
    std::vector<Value> table_;
};

// All phi(m) characters mod m in a fixed order: unit groups of the prime
// power factors (2-part first, then odd primes ascending), exponents
// enumerated row-major with the principal character first.
std::vector<DirichletCharacter> characters_mod(unsigned long m);

DirichletCharacter character_mod(unsigned long m, unsigned long index);

Value char_eval(const DirichletCharacter& chi, const Int& n);

// a(n) = xi^e * chi(n / base^e) with e the base-adic valuation of n, and
// a(0) = 0.  chi must be a character mod base^r and xi a root of unity.
struct MockCharacter {
    int base = 2;
    unsigned long r = 1;
    DirichletCharacter chi;
    Value xi = Value::one();
};

Value mock_eval(const MockCharacter& mc, const Int& n);

// Automaton computing mock_eval.  One family of states counts trailing
// zeros mod ord(xi); after the first significant digit the unit part is
// accumulated mod base^r and the state saturates.
Dfao mock_character_dfao(const MockCharacter& mc);

}  // namespace automult
