#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "automult/aridsets.hpp"
#include "automult/characters.hpp"
#include "automult/dfao.hpp"
#include "automult/growth.hpp"

namespace automult {

// Outputs a(0..limit) interned against the automaton's output palette, so
// sequence scans compare small integers instead of exact scalars.
struct EvalTable {
    int base = 2;
    std::uint64_t limit = 0;
    std::vector<Value> palette;       // distinct state outputs, first-seen order
    std::vector<std::int32_t> ids;    // ids[n] indexes palette, n <= limit

    const Value& at(std::uint64_t n) const { return palette[ids[n]]; }
    bool zero_at(std::uint64_t n) const { return palette[ids[n]].is_zero(); }
};

EvalTable build_table(const Dfao& d, std::uint64_t limit);

// a(m n) != a(m) a(n) with m <= n; the scan covers 1 <= m <= n, m n <= limit
// and reports the least counterexample by product, then by m.
struct MultCounterexample {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
};

std::optional<MultCounterexample> check_multiplicative(const EvalTable& t, bool complete);
std::optional<MultCounterexample> check_multiplicative(const Dfao& d, std::uint64_t limit,
                                                       bool complete);

// {n <= limit : a(n) != 0}, ascending; n = 0 included when a(0) != 0.
std::vector<std::uint64_t> support(const EvalTable& t);
std::vector<std::uint64_t> support(const Dfao& d, std::uint64_t limit);

// Same states and transitions, outputs collapsed to the nonzero indicator.
Dfao support_dfao(const Dfao& d);

// Support shape of a multiplicative sequence.  Sparse comes with geometric
// progressions covering the support exactly (verified on [0, limit]);
// NotSparse carries the exponential-growth witness.  Incompatible means the
// support is polynomial yet contains a pump family no multiplicative
// sequence admits; the witness pins the family.
struct SparseAnalysis {
    enum class Outcome { Sparse, NotSparse, Incompatible };
    Outcome outcome = Outcome::Sparse;

    std::vector<GeometricProgression> progressions;
    std::optional<ExponentialWitness> witness;
    std::optional<ForbiddenWitness> forbidden;
};

SparseAnalysis sparse_structure(const Dfao& d, std::uint64_t limit);
SparseAnalysis sparse_structure(const Dfao& d, const EvalTable& t);

// Search for (m, chi, p_star) with a(n) = chi(n) for every 2 <= n <= limit
// whose least prime factor is >= p_star.  Thresholds run ascending through
// primes <= p_max; for each, the identically-zero verdict is tested first
// (on n > 1; a(1) = 1 is forced for multiplicative sequences), then all
// moduli m <= m_max ascending with characters in their canonical order.
struct CharacterRecovery {
    enum class Kind { Found, Zero, NotFound };
    Kind kind = Kind::NotFound;

    unsigned long p_star = 0;
    unsigned long modulus = 0;                 // Found
    std::optional<DirichletCharacter> chi;     // Found
    std::string diagnostics;                   // NotFound
};

CharacterRecovery recover_character(const EvalTable& t, unsigned long m_max,
                                    unsigned long p_max);
CharacterRecovery recover_character(const Dfao& d, std::uint64_t limit, unsigned long m_max,
                                    unsigned long p_max);

// Exact values a(p^0 .. p^alpha_max) with the two tail analyses: the
// geometric test (all values nonzero and a(p^(alpha+1)) = a(p) a(p^alpha))
// and, for p not dividing the base, the least (preperiod, period) in
// lexicographic order with period <= alpha_max / 2 under which the tail is
// periodic on the computed window.
struct PrimePowerProfile {
    unsigned long p = 2;
    bool divides_base = false;
    std::vector<Value> values;
    bool geometric = false;
    Value ratio;  // a(p); the common ratio when geometric
    std::optional<std::pair<unsigned long, unsigned long>> periodicity;
};

PrimePowerProfile prime_power_profile(const Dfao& d, unsigned long p, unsigned long alpha_max);

// Least period q <= period_max admitting a table b and threshold n0 with
// a(n) = b(n mod q) for all n0 <= n <= limit coprime to the base; the match
// is rejected when it only holds on the top half of the window (n0 bounded
// by limit / 2).  Residue classes without coprime members get b = 0.
struct PeriodicMatch {
    unsigned long period = 1;
    std::uint64_t n0 = 0;
    std::vector<Value> table;
};

std::optional<PeriodicMatch> periodic_match(const EvalTable& t, unsigned long period_max);
std::optional<PeriodicMatch> periodic_match(const Dfao& d, std::uint64_t limit,
                                            unsigned long period_max);

// Empirical stand-ins measured on the profiled primes of one report; never
// certified.  p0: profiles are zero-free from here on.  p1: the recovered
// character threshold.  p2: profiles pass the geometric test from here on.
// p3: profile periodicity was found from here on (primes coprime to the
// base only).
struct Thresholds {
    unsigned long p0 = 2;
    unsigned long p1 = 2;
    unsigned long p2 = 2;
    unsigned long p3 = 2;
};

struct ClassificationReport {
    enum class Mode { Sparse, Dense, Inconclusive };
    Mode mode = Mode::Inconclusive;

    int base = 2;
    int states = 0;
    std::string dfao_hash;
    std::uint64_t verified_N = 0;
    unsigned long m_max = 0;
    unsigned long p_max = 0;
    unsigned long alpha_max = 0;
    unsigned long period_max = 0;

    bool multiplicative = false;
    bool completely_multiplicative = false;
    std::optional<MultCounterexample> counterexample;

    std::vector<GeometricProgression> progressions;  // Sparse
    std::optional<ExponentialWitness> dense_witness;
    std::optional<ForbiddenWitness> forbidden;

    CharacterRecovery recovery;                 // Dense / Inconclusive-dense
    std::vector<PrimePowerProfile> profiles;    // primes below p_star
    std::optional<PeriodicMatch> periodic;
    Thresholds thresholds;

    std::vector<std::string> notes;
};

// Full pipeline: validate, multiplicativity scan (Inconclusive with the
// counterexample on failure), support growth split, then either the sparse
// progression cover or the dense character machinery.  Deterministic:
// identical inputs yield byte-identical reports.
ClassificationReport classify(const Dfao& d, std::uint64_t N = 1000000,
                              unsigned long m_max = 16, unsigned long p_max = 11,
                              unsigned long alpha_max = 100);

// Machine form: one self-describing JSON document with stable key order.
std::string report_structured(const ClassificationReport& r);
std::string report_human(const ClassificationReport& r);

}  // namespace automult
