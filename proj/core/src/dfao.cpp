#include "automult/dfao.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "automult/numtheory.hpp"

namespace automult {

int Dfao::run_word(const DigitWord& w, int from) const {
    int s = from;
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it) s = delta[s][*it];
    return s;
}

int Dfao::run_int(const Int& n) const {
    if (n < 0) throw Error("negative", "no expansion for negative " + n.get_str());
    int s = initial;
    Int rest = n;
    while (rest > 0) {
        Int q;
        unsigned long dgt = mpz_fdiv_q_ui(q.get_mpz_t(), rest.get_mpz_t(), base);
        s = delta[s][static_cast<int>(dgt)];
        rest = q;
    }
    return s;
}

int Dfao::run_u64(std::uint64_t n) const {
    int s = initial;
    const std::uint64_t b = static_cast<std::uint64_t>(base);
    while (n > 0) {
        s = delta[s][static_cast<int>(n % b)];
        n /= b;
    }
    return s;
}

Value Dfao::eval(const Int& n) const { return output[run_int(n)]; }

Value Dfao::eval_u64(std::uint64_t n) const { return output[run_u64(n)]; }

Dfao Dfao::with_initial(int state) const {
    Dfao copy = *this;
    copy.initial = state;
    return copy;
}

std::vector<bool> Dfao::reachable_from(int state) const {
    std::vector<bool> seen(size(), false);
    std::deque<int> queue{state};
    seen[state] = true;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int c = 0; c < base; ++c) {
            int t = delta[s][c];
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    return seen;
}

ValidationResult validate(const Dfao& d) {
    ValidationResult res;
    auto fail = [&](const std::string& msg) {
        res.ok = false;
        res.errors.push_back(msg);
    };

    if (d.base < 2) fail("base must be at least 2");
    int n = d.size();
    if (n == 0) fail("automaton has no states");
    if (d.initial < 0 || d.initial >= n) fail("initial state out of range");
    if (static_cast<int>(d.delta.size()) != n) fail("delta must cover every state");
    if (static_cast<int>(d.output.size()) != n) fail("output must cover every state");
    {
        std::unordered_set<std::string> names(d.state_names.begin(), d.state_names.end());
        if (static_cast<int>(names.size()) != n) fail("state names must be unique");
    }
    if (!res.ok) return res;

    for (int s = 0; s < n; ++s) {
        if (static_cast<int>(d.delta[s].size()) != d.base) {
            fail("state " + d.state_names[s] + " is missing transitions");
            continue;
        }
        for (int c = 0; c < d.base; ++c) {
            int t = d.delta[s][c];
            if (t < 0 || t >= n)
                fail("state " + d.state_names[s] + " digit " + std::to_string(c) + " maps out of range");
        }
    }
    if (!res.ok) return res;

    // Leading-zero invariance at the output level: padding the expansion
    // with high zeros may move the state but must never change the value.
    std::vector<bool> reach = d.reachable_from(d.initial);
    for (int s = 0; s < n; ++s) {
        if (!reach[s]) continue;
        int t = d.delta[s][0];
        if (!(d.output[t] == d.output[s]))
            fail("leading-zero-variance at state " + d.state_names[s] + ": output changes from " +
                 d.output[s].display() + " to " + d.output[t].display() + " under the zero digit");
    }

    if (mpz_perfect_power_p(Int(d.base).get_mpz_t()))
        res.warnings.push_back("base " + std::to_string(d.base) +
                               " is a perfect power; the same sequence exists over a smaller base");
    return res;
}

StateMap identity_map(const Dfao& d) {
    StateMap m;
    m.map.resize(d.size());
    std::iota(m.map.begin(), m.map.end(), 0);
    m.witness.base = d.base;
    return m;
}

StateMap transition_of_word(const Dfao& d, const DigitWord& w) {
    if (w.base != d.base) throw Error("base-mismatch", "word base differs from automaton base");
    StateMap m = identity_map(d);
    // Feed least significant digit first: each new digit acts after the
    // accumulated map.
    for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it) {
        for (int& s : m.map) s = d.delta[s][*it];
    }
    m.witness = w;
    return m;
}

StateMap compose(const StateMap& f, const StateMap& g) {
    StateMap r;
    r.map.resize(g.map.size());
    for (std::size_t s = 0; s < g.map.size(); ++s) r.map[s] = f.map[g.map[s]];
    r.witness = concat(f.witness, g.witness);
    return r;
}

std::vector<StateMap> transition_monoid(const Dfao& d, std::size_t max_size) {
    std::vector<StateMap> generators;
    for (int c = 0; c < d.base; ++c) {
        DigitWord w(d.base, {c});
        generators.push_back(transition_of_word(d, w));
    }

    std::vector<StateMap> elements{identity_map(d)};
    std::map<std::vector<int>, std::size_t> index{{elements[0].map, 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t at = queue.front();
        queue.pop_front();
        for (int c = 0; c < d.base; ++c) {
            // delta_{cw} = delta_c . delta_w extends the witness at the
            // most significant end, keeping witnesses shortest-first.
            StateMap next = compose(generators[c], elements[at]);
            if (index.emplace(next.map, elements.size()).second) {
                elements.push_back(next);
                queue.push_back(elements.size() - 1);
                if (elements.size() > max_size)
                    throw Error("monoid-too-large",
                                "transition monoid exceeds " + std::to_string(max_size) + " elements");
            }
        }
    }
    return elements;
}

Int idempotent_exponent(const Dfao& d) {
    std::vector<StateMap> monoid = transition_monoid(d);
    Int period_lcm = 1;
    unsigned long max_entry = 1;
    for (const StateMap& f : monoid) {
        // Walk powers f, f^2, ... until the first repeat; index i enters the
        // cycle at the preperiod boundary.
        std::map<std::vector<int>, unsigned long> seen;
        StateMap g = f;
        unsigned long i = 1;
        for (;;) {
            auto [it, fresh] = seen.emplace(g.map, i);
            if (!fresh) {
                unsigned long enter = it->second;
                unsigned long period = i - enter;
                period_lcm = lcm(period_lcm, Int(period));
                max_entry = std::max(max_entry, enter);
                break;
            }
            g = compose(g, f);
            ++i;
        }
    }
    // Least multiple of every period that reaches every cycle.
    Int m = period_lcm * ((Int(max_entry) + period_lcm - 1) / period_lcm);
    return m;
}

std::vector<KernelElement> k_kernel(const Dfao& d) {
    std::vector<KernelElement> elements;
    std::vector<bool> seen(d.size(), false);
    std::deque<KernelElement> queue;
    queue.push_back(KernelElement{0, Int(0), d.initial});
    seen[d.initial] = true;
    while (!queue.empty()) {
        KernelElement e = queue.front();
        queue.pop_front();
        elements.push_back(e);
        for (int c = 0; c < d.base; ++c) {
            int t = d.delta[e.state][c];
            if (seen[t]) continue;
            seen[t] = true;
            KernelElement child;
            child.alpha = e.alpha + 1;
            child.r = e.r + Int(c) * pow_int(static_cast<unsigned long>(d.base), e.alpha);
            child.state = t;
            queue.push_back(child);
        }
    }
    return elements;
}

std::pair<unsigned long, unsigned long> kernel_shift_pair(const Dfao& d) {
    // States after the padded expansions of 1: t_0 = initial, t_1 = delta_1,
    // then repeated zero padding.
    std::vector<int> trace{d.initial};
    int s = d.delta[d.initial][1];
    for (;;) {
        for (unsigned long beta = 0; beta < trace.size(); ++beta) {
            if (trace[beta] == s) return {beta, trace.size()};
        }
        trace.push_back(s);
        s = d.delta[s][0];
    }
}

namespace {

StateMap padded_map(const Dfao& d, const Int& n, std::size_t l) {
    return transition_of_word(d, padded_suffix(n, d.base, l));
}

}  // namespace

bool int_equiv(const Dfao& d, const Int& n1, const Int& n2) {
    std::size_t l = std::max(digit_length(n1, d.base), digit_length(n2, d.base));
    StateMap a = padded_map(d, n1, l);
    StateMap b = padded_map(d, n2, l);
    StateMap zero = transition_of_word(d, DigitWord(d.base, {0}));
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    while (seen.emplace(a.map, b.map).second) {
        if (a.map == b.map) return true;
        a = compose(zero, a);
        b = compose(zero, b);
    }
    return false;
}

std::pair<Int, Int> equiv_pair_search(const Dfao& d, const Int& p, std::uint64_t bound) {
    if (p < 2 || !is_prime(p)) throw Error("bad-argument", "equiv_pair_search needs a prime p");
    std::uint64_t pu = to_u64(p, "p");
    std::size_t l = digit_length(Int(bound), d.base);
    std::size_t lp = l + digit_length(p, d.base);
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::uint64_t> first_with_key;
    for (std::uint64_t n = 0; n <= bound; ++n) {
        auto key = std::make_pair(padded_map(d, Int(n), l).map, padded_map(d, Int(n) * p, lp).map);
        auto [it, fresh] = first_with_key.emplace(std::move(key), n);
        if (fresh) continue;
        std::uint64_t n1 = it->second;
        if (n1 % pu == n % pu) continue;
        Int a(n1), b(n);
        if (!int_equiv(d, a, b) || !int_equiv(d, a * p, b * p))
            throw Error("internal", "padded-key collision failed the pairwise check");
        return {a, b};
    }
    throw Error("exhausted", "no equivalent pair with distinct residues mod " + p.get_str() +
                                 " below bound " + std::to_string(bound));
}

}  // namespace automult
