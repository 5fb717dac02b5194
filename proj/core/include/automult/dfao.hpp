#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "automult/digits.hpp"
#include "automult/value.hpp"

namespace automult {

// Deterministic finite automaton with output.  Words act on states through
// delta with the composition rule delta_{uv} = delta_u . delta_v, i.e. the
// suffix (least significant digits) is applied first; evaluation feeds the
// digits of (n)_k least-significant first starting from `initial` and reads
// the output of the final state.
struct Dfao {
    int base = 2;
    std::vector<std::string> state_names;
    int initial = 0;
    std::vector<std::vector<int>> delta;  // delta[state][digit]
    std::vector<Value> output;

    int size() const { return static_cast<int>(state_names.size()); }
    int step(int state, int digit) const { return delta[state][digit]; }

    // Final state after feeding the digits of w least-significant first.
    int run_word(const DigitWord& w, int from) const;
    int run_int(const Int& n) const;

    Value eval(const Int& n) const;
    // Fast scan path; identical semantics for n < 2^64.
    Value eval_u64(std::uint64_t n) const;
    int run_u64(std::uint64_t n) const;

    Dfao with_initial(int state) const;

    std::vector<bool> reachable_from(int state) const;
};

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
};

// Structural checks plus the padding normalization: every state reachable
// from the initial one must keep its output under the zero transition, so
// evaluation does not depend on how far the expansion is padded with leading
// zeros.  A perfect-power base only warns; it is legal but collapses to a
// smaller base.
ValidationResult validate(const Dfao& d);

// Total map on states induced by a word, with a word that induces it.
struct StateMap {
    std::vector<int> map;
    DigitWord witness;

    bool operator==(const StateMap& other) const { return map == other.map; }
};

StateMap identity_map(const Dfao& d);
StateMap transition_of_word(const Dfao& d, const DigitWord& w);
// f after g (g acts first).
StateMap compose(const StateMap& f, const StateMap& g);

// The monoid generated by the one-digit maps, discovered breadth first so
// each element carries a shortest witness.  Deterministic order.
std::vector<StateMap> transition_monoid(const Dfao& d, std::size_t max_size = 200000);

// Least M >= 1 with f^(2M) = f^M for every element f of the transition
// monoid; M is at most |S|! by the cycle structure of map powers.
Int idempotent_exponent(const Dfao& d);

// One element of the forward-reachability kernel: the sequence
// n -> eval(k^alpha n + r) realized by moving the initial state to `state`,
// valid for n >= 1 (n = 0 depends on padding, which the witness fixes).
struct KernelElement {
    unsigned long alpha = 0;
    Int r;
    int state = 0;
};

// All states reachable from the initial one with breadth-first witnesses
// (alpha, r); element 0 is the sequence itself.  Size is bounded by |S|.
std::vector<KernelElement> k_kernel(const Dfao& d);

// beta < gamma <= |S|+1 with equal states after the padded expansions of 1
// of lengths beta and gamma; consequently eval(k^beta n + 1) =
// eval(k^gamma n + 1) for all n >= 1.  Existence is pigeonhole.
std::pair<unsigned long, unsigned long> kernel_shift_pair(const Dfao& d);

// Whether n1 and n2 act identically on states once padded to a common
// length.  Equality at the least covering length propagates upward; when it
// fails there, the zero-padding orbit is still explored to completion, so
// the answer is exact for every padding length.
bool int_equiv(const Dfao& d, const Int& n1, const Int& n2);

// Searches n1 < n2 <= bound, n1 != n2 (mod p), with n1 ~ n2 and
// p*n1 ~ p*n2 in the padded-action sense above.  Deterministic scan in
// ascending n2; throws "exhausted" when no pair exists below the bound.
std::pair<Int, Int> equiv_pair_search(const Dfao& d, const Int& p, std::uint64_t bound);

}  // namespace automult
