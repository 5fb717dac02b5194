#pragma once

#include <string>

#include "automult/bigint.hpp"

namespace automult {

// Exact scalar: a nonnegative rational coefficient times a root of unity
// zeta(d, e) = exp(2*pi*i*e/d).  The canonical form keeps
//   - e/d reduced with 0 <= e < d,
//   - coeff >= 0 (a sign is folded into the root as zeta(2, 1)),
//   - coeff == 0 implying the trivial root,
// so two Values are equal iff their fields are equal.  The set is closed
// under multiplication and integer powers; equality is never approximate.
class Value {
public:
    Value() = default;  // zero

    static Value integer(const Int& n);
    static Value rational(const Rat& q);
    // zeta(d, e); e may be any integer and is reduced mod d.
    static Value root_of_unity(unsigned long d, long e);

    static Value zero() { return Value(); }
    static Value one() { return integer(1); }

    bool is_zero() const { return coeff_ == 0; }
    bool is_one() const { return coeff_ == 1 && zd_ == 1; }
    // True when the value is a plain rational (root part trivial or -1).
    bool is_rational() const { return zd_ <= 2; }
    Rat rational_part() const;  // only valid when is_rational()

    const Rat& coeff() const { return coeff_; }
    unsigned long root_den() const { return zd_; }
    unsigned long root_num() const { return ze_; }
    // Order of the root-of-unity part of the value (1 for positive
    // rationals); requires a nonzero value of modulus 1 to be meaningful.
    unsigned long root_order() const { return zd_; }

    Value operator*(const Value& other) const;
    Value& operator*=(const Value& other) { return *this = *this * other; }
    Value pow(unsigned long e) const;

    bool operator==(const Value&) const = default;
    // Arbitrary strict order so Values can key ordered containers.
    bool operator<(const Value& other) const;

    // Serialization token: "int:n", "rat:p/q" or "zeta:d,e".  Values outside
    // these shapes (a non-unit coefficient with a complex root) cannot be
    // written to files and raise an error.
    std::string str() const;
    // Human shape: same as str() without the int:/rat: prefixes.
    std::string display() const;

    static Value parse(const std::string& token);

private:
    Value(Rat coeff, unsigned long zd, unsigned long ze);
    void canonicalize();

    Rat coeff_ = 0;
    unsigned long zd_ = 1;
    unsigned long ze_ = 0;
};

}  // namespace automult
