#include "automult/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <variant>

#include <nlohmann/json.hpp>

#include "automult/dfao_io.hpp"
#include "automult/error.hpp"
#include "automult/numtheory.hpp"

namespace automult {

using ojson = nlohmann::ordered_json;

EvalTable build_table(const Dfao& d, std::uint64_t limit) {
    EvalTable t;
    t.base = d.base;
    t.limit = limit;
    // palette ids per state; identical outputs share an id
    std::vector<std::int32_t> pid(d.output.size(), -1);
    for (std::size_t s = 0; s < d.output.size(); ++s) {
        for (std::size_t q = 0; q < s && pid[s] < 0; ++q)
            if (d.output[q] == d.output[s]) pid[s] = pid[q];
        if (pid[s] < 0) {
            pid[s] = static_cast<std::int32_t>(t.palette.size());
            t.palette.push_back(d.output[s]);
        }
    }
    t.ids.resize(limit + 1);
    for (std::uint64_t n = 0; n <= limit; ++n) t.ids[n] = pid[d.run_u64(n)];
    return t;
}

std::optional<MultCounterexample> check_multiplicative(const EvalTable& t, bool complete) {
    const std::uint64_t N = t.limit;
    const std::size_t P = t.palette.size();
    // expected[i*P+j]: id of palette[i]*palette[j], -1 when the product is
    // not an attainable output (then a(mn) mismatches for sure)
    std::vector<std::int32_t> expected(P * P, -1);
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = 0; j < P; ++j) {
            Value prod = t.palette[i] * t.palette[j];
            for (std::size_t q = 0; q < P; ++q)
                if (t.palette[q] == prod) {
                    expected[i * P + j] = static_cast<std::int32_t>(q);
                    break;
                }
        }
    std::optional<MultCounterexample> best;
    auto candidate = [&](std::uint64_t m, std::uint64_t n) {
        if (!best) {
            best = MultCounterexample{m, n};
            return;
        }
        std::uint64_t p1 = m * n, p0 = best->m * best->n;
        if (p1 < p0 || (p1 == p0 && m < best->m)) best = MultCounterexample{m, n};
    };
    for (std::uint64_t m = 1; m * m <= N; ++m)
        for (std::uint64_t n = m; m * n <= N; ++n) {
            if (!complete && std::gcd(m, n) != 1) continue;
            std::int32_t e = expected[static_cast<std::size_t>(t.ids[m]) * P + t.ids[n]];
            if (e != t.ids[m * n]) candidate(m, n);
        }
    return best;
}

std::optional<MultCounterexample> check_multiplicative(const Dfao& d, std::uint64_t limit,
                                                       bool complete) {
    return check_multiplicative(build_table(d, limit), complete);
}

std::vector<std::uint64_t> support(const EvalTable& t) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n <= t.limit; ++n)
        if (!t.zero_at(n)) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> support(const Dfao& d, std::uint64_t limit) {
    return support(build_table(d, limit));
}

Dfao support_dfao(const Dfao& d) {
    Dfao ind = d;
    for (Value& v : ind.output) v = v.is_zero() ? Value::zero() : Value::one();
    return ind;
}

namespace {

// One decomposition part whose pumps and lower islands are all zero-valued
// takes the values x * k^(E0 + sum s_i t_i); the exponents beyond the
// largest gap form a single residue class mod gcd(s_i).
std::vector<GeometricProgression> clean_part_progressions(const BasicAridSet& a) {
    std::size_t r = a.rank();
    Int x = word_to_int(a.u[r]);
    unsigned long e0 = 0;
    std::vector<unsigned long> steps;
    for (std::size_t i = 0; i < r; ++i) {
        e0 += static_cast<unsigned long>(a.u[i].size());
        LengthRestriction lr = a.restriction(i);
        e0 += static_cast<unsigned long>(a.v[i].size()) * lr.offset;
        steps.push_back(static_cast<unsigned long>(a.v[i].size()) * lr.modulus);
    }
    unsigned long g = 0;
    for (unsigned long s : steps) g = std::gcd(g, s);
    std::vector<unsigned long> sp;
    for (unsigned long s : steps) sp.push_back(s / g);
    unsigned long mn = *std::min_element(sp.begin(), sp.end());
    unsigned long mx = *std::max_element(sp.begin(), sp.end());
    Int kpow = pow_int(static_cast<unsigned long>(a.base), e0);
    if (mn == 1) return {GeometricProgression{x * kpow, g}};
    // reachability window: every value past the largest gap is reachable
    // once a run of mn consecutive exponents is
    unsigned long bound = 2 * mx * mx + mx + mn;
    std::vector<char> reach(bound + 1, 0);
    reach[0] = 1;
    for (unsigned long e = 1; e <= bound; ++e)
        for (unsigned long s : sp)
            if (e >= s && reach[e - s]) {
                reach[e] = 1;
                break;
            }
    unsigned long tail = bound + 1;
    for (unsigned long start = 0; start + mn <= bound + 1; ++start) {
        bool run = true;
        for (unsigned long j = 0; j < mn && run; ++j) run = reach[start + j];
        if (run) {
            tail = start;
            break;
        }
    }
    if (tail > bound) throw Error("internal", "no reachable run inside the pump-step window");
    std::vector<GeometricProgression> out;
    Int kg = pow_int(static_cast<unsigned long>(a.base), g);
    for (unsigned long e = 0; e < tail; ++e)
        if (reach[e]) out.push_back(GeometricProgression{x * kpow * pow_int(kg, e), 0});
    out.push_back(GeometricProgression{x * kpow * pow_int(kg, tail), g});
    return out;
}

std::variant<std::vector<GeometricProgression>, ForbiddenWitness> part_progressions(
    const BasicAridSet& a) {
    std::size_t r = a.rank();
    if (r == 0)
        return std::vector<GeometricProgression>{GeometricProgression{word_to_int(a.u[0]), 0}};
    bool clean = word_to_int(a.u[r]) != 0;
    for (std::size_t i = 0; i < r && clean; ++i)
        clean = word_to_int(a.u[i]) == 0 && word_to_int(a.v[i]) == 0;
    if (clean) return clean_part_progressions(a);
    PatternCheck pc = forbidden_pattern_check(a);
    if (std::holds_alternative<GeometricProgression>(pc))
        return std::vector<GeometricProgression>{std::get<GeometricProgression>(pc)};
    return std::get<ForbiddenWitness>(pc);
}

bool progression_contains(const GeometricProgression& g, const Int& y, int base) {
    if (g.degenerate()) return y == g.x;
    if (y == 0 || g.x == 0 || y % g.x != 0) return false;
    Int q = y / g.x;
    Int kc = pow_int(static_cast<unsigned long>(base), g.c);
    while (q > 1 && q % kc == 0) q /= kc;
    return q == 1;
}

bool progression_subset(const GeometricProgression& inner, const GeometricProgression& outer,
                        int base) {
    if (outer.degenerate()) return inner.degenerate() && inner.x == outer.x;
    if (inner.degenerate()) return progression_contains(outer, inner.x, base);
    return inner.c % outer.c == 0 && progression_contains(outer, inner.x, base);
}

std::vector<GeometricProgression> merge_progressions(std::vector<GeometricProgression> ps,
                                                     int base) {
    auto lt = [](const GeometricProgression& a, const GeometricProgression& b) {
        return a.x != b.x ? a.x < b.x : a.c < b.c;
    };
    std::sort(ps.begin(), ps.end(), lt);
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<char> dead(ps.size(), 0);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j) {
                if (i == j || dead[i] || dead[j]) continue;
                if (!progression_subset(ps[j], ps[i], base)) continue;
                // mutual containment is equality; keep the earlier one
                if (progression_subset(ps[i], ps[j], base) && i > j) continue;
                dead[j] = 1;
                changed = true;
            }
        // a singleton one step below a progression extends it downward
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (dead[i] || !ps[i].degenerate()) continue;
            for (std::size_t j = 0; j < ps.size(); ++j) {
                if (dead[j] || i == j || ps[j].degenerate()) continue;
                if (ps[i].x * pow_int(static_cast<unsigned long>(base), ps[j].c) == ps[j].x) {
                    ps[j].x = ps[i].x;
                    dead[i] = 1;
                    changed = true;
                    break;
                }
            }
        }
        std::vector<GeometricProgression> alive;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (!dead[i]) alive.push_back(ps[i]);
        ps = std::move(alive);
    }
    std::sort(ps.begin(), ps.end(), lt);
    return ps;
}

}  // namespace

SparseAnalysis sparse_structure(const Dfao& d, const EvalTable& t) {
    if (auto ce = check_multiplicative(t, false)) {
        std::ostringstream os;
        os << "a(m n) != a(m) a(n) at (m, n) = (" << ce->m << ", " << ce->n << ")";
        throw Error("not-multiplicative", os.str());
    }
    SparseAnalysis out;
    GrowthAnalysis g = support_growth(d);
    if (g.kind == GrowthAnalysis::Kind::Exponential) {
        out.outcome = SparseAnalysis::Outcome::NotSparse;
        out.witness = g.witness;
        return out;
    }
    std::vector<GeometricProgression> ps;
    for (const BasicAridSet& part : g.decomposition) {
        auto res = part_progressions(part);
        if (std::holds_alternative<ForbiddenWitness>(res)) {
            out.outcome = SparseAnalysis::Outcome::Incompatible;
            out.forbidden = std::get<ForbiddenWitness>(res);
            return out;
        }
        for (GeometricProgression& p : std::get<std::vector<GeometricProgression>>(res))
            ps.push_back(std::move(p));
    }
    out.progressions = merge_progressions(std::move(ps), d.base);
    // the cover must reproduce the support exactly on the window
    std::vector<std::uint64_t> cover;
    for (const GeometricProgression& p : out.progressions)
        for (const Int& e : progression_elements(p, d.base, Int(static_cast<unsigned long>(t.limit))))
            cover.push_back(to_u64(e, "progression element"));
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    if (cover != support(t)) throw Error("internal", "progression cover misses the support");
    out.outcome = SparseAnalysis::Outcome::Sparse;
    return out;
}

SparseAnalysis sparse_structure(const Dfao& d, std::uint64_t limit) {
    return sparse_structure(d, build_table(d, limit));
}

CharacterRecovery recover_character(const EvalTable& t, unsigned long m_max,
                                    unsigned long p_max) {
    CharacterRecovery out;
    const std::uint64_t N = t.limit;
    if (N < 2) {
        out.diagnostics = "window too small to test anything beyond n = 1";
        return out;
    }
    std::vector<std::uint32_t> lpf(N + 1, 0);
    for (std::uint64_t i = 2; i <= N; ++i)
        if (!lpf[i])
            for (std::uint64_t j = i; j <= N; j += i)
                if (!lpf[j]) lpf[j] = static_cast<std::uint32_t>(i);
    std::map<Value, std::int32_t> pid;
    for (std::size_t i = 0; i < t.palette.size(); ++i)
        pid.emplace(t.palette[i], static_cast<std::int32_t>(i));
    std::vector<char> pzero;
    for (const Value& v : t.palette) pzero.push_back(v.is_zero() ? 1 : 0);
    for (std::uint64_t p_star : sieve(p_max)) {
        bool allzero = true;
        for (std::uint64_t n = 2; n <= N && allzero; ++n)
            if (lpf[n] >= p_star && !pzero[t.ids[n]]) allzero = false;
        if (allzero) {
            out.kind = CharacterRecovery::Kind::Zero;
            out.p_star = static_cast<unsigned long>(p_star);
            return out;
        }
        for (unsigned long m = 1; m <= m_max; ++m)
            for (const DirichletCharacter& chi : characters_mod(m)) {
                std::vector<std::int32_t> ctab(m, -1);
                for (unsigned long res = 0; res < m; ++res) {
                    auto it = pid.find(chi.at(res));
                    if (it != pid.end()) ctab[res] = it->second;
                }
                bool ok = true;
                for (std::uint64_t n = 2; n <= N && ok; ++n)
                    if (lpf[n] >= p_star && t.ids[n] != ctab[n % m]) ok = false;
                if (ok) {
                    out.kind = CharacterRecovery::Kind::Found;
                    out.p_star = static_cast<unsigned long>(p_star);
                    out.modulus = m;
                    out.chi = chi;
                    return out;
                }
            }
    }
    std::ostringstream os;
    os << "no character matched: thresholds through " << p_max << ", moduli through " << m_max;
    out.diagnostics = os.str();
    return out;
}

CharacterRecovery recover_character(const Dfao& d, std::uint64_t limit, unsigned long m_max,
                                    unsigned long p_max) {
    return recover_character(build_table(d, limit), m_max, p_max);
}

PrimePowerProfile prime_power_profile(const Dfao& d, unsigned long p, unsigned long alpha_max) {
    if (!is_prime_u64(p)) throw Error("bad-argument", "profile base must be prime");
    if (alpha_max > 500) throw Error("out-of-range", "alpha_max is capped at 500");
    PrimePowerProfile out;
    out.p = p;
    out.divides_base = static_cast<unsigned long>(d.base) % p == 0;
    Int pk = 1;
    for (unsigned long a = 0; a <= alpha_max; ++a) {
        out.values.push_back(d.eval(pk));
        pk *= static_cast<unsigned long>(p);
    }
    out.ratio = out.values.size() > 1 ? out.values[1] : Value::one();
    bool ok = true;
    for (const Value& v : out.values) ok = ok && !v.is_zero();
    for (unsigned long a = 0; ok && a < alpha_max; ++a)
        ok = out.values[a + 1] == out.ratio * out.values[a];
    out.geometric = ok;
    if (!out.divides_base && alpha_max >= 2) {
        std::map<Value, int> seen;
        std::vector<int> vid;
        for (const Value& v : out.values) vid.push_back(seen.emplace(v, (int)seen.size()).first->second);
        for (unsigned long t = 0; t <= alpha_max && !out.periodicity; ++t)
            for (unsigned long q = 1; q <= alpha_max / 2 && t + q <= alpha_max; ++q) {
                bool per = true;
                for (unsigned long a = t; a + q <= alpha_max && per; ++a) per = vid[a + q] == vid[a];
                if (per) {
                    out.periodicity = {t, q};
                    break;
                }
            }
    }
    return out;
}

std::optional<PeriodicMatch> periodic_match(const EvalTable& t, unsigned long period_max) {
    const std::uint64_t N = t.limit;
    const unsigned long k = static_cast<unsigned long>(t.base);
    std::vector<char> cop(k);
    for (unsigned long r = 0; r < k; ++r) cop[r] = std::gcd(r, k) == 1 ? 1 : 0;
    for (unsigned long q = 1; q <= period_max; ++q) {
        std::vector<std::int32_t> stable(q, -1);
        std::vector<std::uint64_t> viol(q, 0);
        for (std::uint64_t n = N; n >= 1; --n) {
            if (!cop[n % k]) continue;
            std::uint64_t rho = n % q;
            if (stable[rho] < 0)
                stable[rho] = t.ids[n];
            else if (!viol[rho] && t.ids[n] != stable[rho])
                viol[rho] = n;  // largest violator in this class
        }
        std::uint64_t n0 = 0;
        for (unsigned long rho = 0; rho < q; ++rho)
            if (viol[rho]) n0 = std::max(n0, viol[rho] + 1);
        if (n0 <= N / 2) {
            PeriodicMatch pm;
            pm.period = q;
            pm.n0 = n0;
            for (unsigned long rho = 0; rho < q; ++rho)
                pm.table.push_back(stable[rho] >= 0 ? t.palette[stable[rho]] : Value::zero());
            return pm;
        }
    }
    return std::nullopt;
}

std::optional<PeriodicMatch> periodic_match(const Dfao& d, std::uint64_t limit,
                                            unsigned long period_max) {
    return periodic_match(build_table(d, limit), period_max);
}

ClassificationReport classify(const Dfao& d, std::uint64_t N, unsigned long m_max,
                              unsigned long p_max, unsigned long alpha_max) {
    ValidationResult vr = validate(d);
    if (!vr.ok) throw Error("bad-dfao", vr.errors.front());
    ClassificationReport r;
    r.base = d.base;
    r.states = d.size();
    r.dfao_hash = dfao_hash(d);
    r.verified_N = N;
    r.m_max = m_max;
    r.p_max = p_max;
    r.alpha_max = alpha_max;
    r.period_max = m_max * static_cast<unsigned long>(d.base);
    r.notes.push_back("every claim is an exhaustive check on the stated window; nothing is certified beyond it");
    r.notes.push_back("multiplicativity is scanned over pairs 1 <= m <= n with m n <= N; n = 0 enters only through the support");
    EvalTable t = build_table(d, N);
    r.counterexample = check_multiplicative(t, false);
    r.multiplicative = !r.counterexample.has_value();
    if (!r.multiplicative) {
        r.mode = ClassificationReport::Mode::Inconclusive;
        r.notes.push_back("the sequence is not multiplicative; no support or character analysis applies");
        return r;
    }
    r.completely_multiplicative = !check_multiplicative(t, true).has_value();
    SparseAnalysis sa = sparse_structure(d, t);
    if (sa.outcome == SparseAnalysis::Outcome::Sparse) {
        r.mode = ClassificationReport::Mode::Sparse;
        r.progressions = sa.progressions;
        r.notes.push_back("the progression cover equals the support exactly on [0, N]");
        return r;
    }
    if (sa.outcome == SparseAnalysis::Outcome::Incompatible) {
        r.mode = ClassificationReport::Mode::Inconclusive;
        r.forbidden = sa.forbidden;
        r.notes.push_back("polynomial support containing a pumpable family no multiplicative sequence admits; the window check must fail at some larger bound");
        return r;
    }
    r.dense_witness = sa.witness;
    r.recovery = recover_character(t, m_max, p_max);
    if (r.recovery.kind == CharacterRecovery::Kind::NotFound) {
        r.mode = ClassificationReport::Mode::Inconclusive;
        r.notes.push_back("support grows like the full language but no character matched within the search bounds");
        return r;
    }
    r.mode = ClassificationReport::Mode::Dense;
    if (r.recovery.kind == CharacterRecovery::Kind::Zero)
        r.notes.push_back("the zero verdict excludes n = 1, where any multiplicative sequence takes 1");
    for (std::uint64_t p : sieve(r.recovery.p_star > 0 ? r.recovery.p_star - 1 : 0))
        r.profiles.push_back(prime_power_profile(d, static_cast<unsigned long>(p), alpha_max));
    r.periodic = periodic_match(t, r.period_max);
    auto next_prime = [](unsigned long p) {
        do ++p; while (!is_prime_u64(p));
        return p;
    };
    r.thresholds.p1 = r.recovery.p_star;
    for (const PrimePowerProfile& prof : r.profiles) {
        bool zero = false;
        for (const Value& v : prof.values) zero = zero || v.is_zero();
        if (zero) r.thresholds.p0 = next_prime(prof.p);
        if (!prof.geometric) r.thresholds.p2 = next_prime(prof.p);
        if (!prof.divides_base && !prof.periodicity) r.thresholds.p3 = next_prime(prof.p);
    }
    r.notes.push_back("thresholds are empirical stand-ins read off the profiled primes; none are certified");
    if (!is_prime_u64(static_cast<unsigned long>(d.base)))
        r.notes.push_back("composite base: finiteness of the zero set is observed, not enforced");
    return r;
}

namespace {

ojson word_json(const DigitWord& w) { return word_to_string(w); }

ojson progression_json(const GeometricProgression& p) {
    ojson j;
    j["x"] = p.x.get_str();
    j["c"] = p.c;
    j["degenerate"] = p.degenerate();
    return j;
}

std::string mode_name(ClassificationReport::Mode m) {
    switch (m) {
        case ClassificationReport::Mode::Sparse: return "sparse";
        case ClassificationReport::Mode::Dense: return "dense";
        default: return "inconclusive";
    }
}

}  // namespace

std::string report_structured(const ClassificationReport& r) {
    ojson j;
    j["format"] = "automult.report/1";
    j["dfao"] = ojson{{"hash", r.dfao_hash}, {"base", r.base}, {"states", r.states}};
    j["bounds"] = ojson{{"N", r.verified_N},
                        {"m_max", r.m_max},
                        {"p_max", r.p_max},
                        {"alpha_max", r.alpha_max},
                        {"period_max", r.period_max}};
    j["mode"] = mode_name(r.mode);
    ojson mult;
    mult["coprime"] = r.multiplicative;
    mult["complete"] = r.completely_multiplicative;
    if (r.counterexample) {
        mult["counterexample"] = ojson{{"m", r.counterexample->m},
                                       {"n", r.counterexample->n},
                                       {"product", r.counterexample->m * r.counterexample->n}};
    } else {
        mult["counterexample"] = nullptr;
    }
    j["multiplicative"] = mult;
    if (r.mode == ClassificationReport::Mode::Sparse) {
        ojson arr = ojson::array();
        for (const GeometricProgression& p : r.progressions) arr.push_back(progression_json(p));
        j["sparse"] = ojson{{"progressions", arr}};
    } else {
        j["sparse"] = nullptr;
    }
    if (r.dense_witness) {
        const ExponentialWitness& w = *r.dense_witness;
        j["growth_witness"] = ojson{{"w", word_json(w.w)},
                                    {"v1", word_json(w.v1)},
                                    {"v2", word_json(w.v2)},
                                    {"u", word_json(w.u)},
                                    {"constant", w.constant.str()}};
    } else {
        j["growth_witness"] = nullptr;
    }
    if (r.forbidden) {
        j["forbidden_pattern"] = ojson{{"w", word_json(r.forbidden->w)},
                                       {"v", word_json(r.forbidden->v)},
                                       {"u", word_json(r.forbidden->u)}};
    } else {
        j["forbidden_pattern"] = nullptr;
    }
    if (r.dense_witness) {
        ojson c;
        switch (r.recovery.kind) {
            case CharacterRecovery::Kind::Found: c["verdict"] = "found"; break;
            case CharacterRecovery::Kind::Zero: c["verdict"] = "zero"; break;
            default: c["verdict"] = "not-found"; break;
        }
        c["p_star"] = r.recovery.p_star;
        if (r.recovery.kind == CharacterRecovery::Kind::Found) {
            c["modulus"] = r.recovery.modulus;
            c["index"] = r.recovery.chi->index();
            c["order"] = r.recovery.chi->order();
            c["label"] = r.recovery.chi->label();
            ojson tab = ojson::array();
            for (unsigned long res = 0; res < r.recovery.modulus; ++res)
                tab.push_back(r.recovery.chi->at(res).str());
            c["table"] = tab;
        }
        if (r.recovery.kind == CharacterRecovery::Kind::NotFound)
            c["diagnostics"] = r.recovery.diagnostics;
        c["window"] = "2 <= n <= N with least prime factor >= p_star";
        j["character"] = c;
    } else {
        j["character"] = nullptr;
    }
    ojson profs = ojson::array();
    for (const PrimePowerProfile& p : r.profiles) {
        ojson e;
        e["p"] = p.p;
        e["divides_base"] = p.divides_base;
        e["geometric"] = p.geometric;
        e["ratio"] = p.ratio.str();
        if (p.periodicity) {
            e["periodicity"] = ojson{{"preperiod", p.periodicity->first},
                                     {"period", p.periodicity->second}};
        } else {
            e["periodicity"] = nullptr;
        }
        ojson vals = ojson::array();
        for (const Value& v : p.values) vals.push_back(v.str());
        e["values"] = vals;
        profs.push_back(e);
    }
    j["prime_powers"] = profs;
    if (r.periodic) {
        ojson tab = ojson::array();
        for (const Value& v : r.periodic->table) tab.push_back(v.str());
        j["periodic"] = ojson{{"period", r.periodic->period}, {"n0", r.periodic->n0}, {"table", tab}};
    } else {
        j["periodic"] = nullptr;
    }
    if (r.mode == ClassificationReport::Mode::Dense) {
        j["thresholds"] = ojson{{"p0", r.thresholds.p0},
                                {"p1", r.thresholds.p1},
                                {"p2", r.thresholds.p2},
                                {"p3", r.thresholds.p3},
                                {"certified", false}};
    } else {
        j["thresholds"] = nullptr;
    }
    ojson notes = ojson::array();
    for (const std::string& n : r.notes) notes.push_back(n);
    j["notes"] = notes;
    return j.dump(2) + "\n";
}

std::string report_human(const ClassificationReport& r) {
    std::ostringstream os;
    os << "sequence classification\n";
    os << "  base " << r.base << ", " << r.states << " states, dfao " << r.dfao_hash << "\n";
    os << "  window: n <= " << r.verified_N << "; m_max " << r.m_max << ", p_max " << r.p_max
       << ", alpha_max " << r.alpha_max << ", period_max " << r.period_max << "\n";
    os << "  multiplicative on the window: " << (r.multiplicative ? "yes" : "no");
    if (r.multiplicative)
        os << " (completely multiplicative: " << (r.completely_multiplicative ? "yes" : "no") << ")";
    os << "\n";
    if (r.counterexample)
        os << "  counterexample: a(m n) != a(m) a(n) at (m, n) = (" << r.counterexample->m << ", "
           << r.counterexample->n << ")\n";
    os << "  mode: " << mode_name(r.mode) << "\n";
    if (r.mode == ClassificationReport::Mode::Sparse) {
        os << "  support = union of:\n";
        if (r.progressions.empty()) os << "    (empty)\n";
        for (const GeometricProgression& p : r.progressions) {
            if (p.degenerate())
                os << "    {" << p.x.get_str() << "}\n";
            else
                os << "    " << p.x.get_str() << " * " << r.base << "^(" << p.c << " l), l >= 0\n";
        }
    }
    if (r.dense_witness) {
        switch (r.recovery.kind) {
            case CharacterRecovery::Kind::Found:
                os << "  character: " << r.recovery.chi->label() << ", p_* = " << r.recovery.p_star
                   << "; a(n) = chi(n) for 2 <= n <= " << r.verified_N
                   << " with least prime factor >= " << r.recovery.p_star << "\n";
                break;
            case CharacterRecovery::Kind::Zero:
                os << "  character: identically zero on 2 <= n <= " << r.verified_N
                   << " with least prime factor >= " << r.recovery.p_star << " (p_* = "
                   << r.recovery.p_star << ")\n";
                break;
            default:
                os << "  character: not found (" << r.recovery.diagnostics << ")\n";
                break;
        }
    }
    if (!r.profiles.empty()) {
        os << "  prime powers:\n";
        for (const PrimePowerProfile& p : r.profiles) {
            os << "    p = " << p.p;
            if (p.divides_base) os << " (divides base)";
            if (p.geometric) os << ": geometric, ratio " << p.ratio.display();
            else os << ": not geometric";
            if (p.periodicity)
                os << "; tail periodic from alpha = " << p.periodicity->first << " with period "
                   << p.periodicity->second;
            os << "\n";
        }
    }
    if (r.periodic)
        os << "  periodic tail: period " << r.periodic->period << " from n0 = " << r.periodic->n0
           << "\n";
    if (r.mode == ClassificationReport::Mode::Dense)
        os << "  thresholds (empirical): p0 = " << r.thresholds.p0 << ", p1 = " << r.thresholds.p1
           << ", p2 = " << r.thresholds.p2 << ", p3 = " << r.thresholds.p3 << "\n";
    os << "  notes:\n";
    for (const std::string& n : r.notes) os << "    - " << n << "\n";
    return os.str();
}

}  // namespace automult
