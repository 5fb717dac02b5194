// Command line front end: evaluation, classification, fixtures and the
// arid-set / encoding / certificate wrappers.  Exit codes: 0 success,
// 1 property violation or inconclusive verdict (a report is still printed),
// 2 usage or format errors.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "automult/aridsets.hpp"
#include "automult/characters.hpp"
#include "automult/classify.hpp"
#include "automult/dfao_io.hpp"
#include "automult/error.hpp"
#include "automult/fixtures.hpp"
#include "automult/ggp.hpp"
#include "automult/ipr.hpp"
#include "automult/smallgcd.hpp"

namespace am = automult;
using ojson = nlohmann::ordered_json;

namespace {

bool structured = false;
unsigned jobs = 1;

am::Dfao resolve_dfao(const std::string& name) {
    if (const am::Fixture* f = am::find_fixture(name)) return f->dfao;
    return am::load_dfao(name);
}

// Accepts the serialization tokens plus bare integers and fractions.
am::Value parse_value(const std::string& text) {
    if (text.rfind("int:", 0) == 0 || text.rfind("rat:", 0) == 0 || text.rfind("zeta:", 0) == 0)
        return am::Value::parse(text);
    if (text.find('/') != std::string::npos) return am::Value::parse("rat:" + text);
    return am::Value::parse("int:" + text);
}

std::vector<am::DigitWord> parse_words(const std::vector<std::string>& toks, int base) {
    std::vector<am::DigitWord> out;
    for (const std::string& t : toks)
        out.push_back(t == "-" ? am::DigitWord{base, {}} : am::word_from_string(t, base));
    return out;
}

// "offset:modulus" per pump.
std::vector<am::LengthRestriction> parse_restrictions(const std::vector<std::string>& toks) {
    std::vector<am::LengthRestriction> out;
    for (const std::string& t : toks) {
        auto colon = t.find(':');
        if (colon == std::string::npos)
            throw am::Error("usage", "restriction must look like offset:modulus");
        out.push_back({std::stoul(t.substr(0, colon)), std::stoul(t.substr(colon + 1))});
    }
    return out;
}

std::vector<am::Rat> parse_coeffs(const std::string& text) {
    std::vector<am::Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        am::Rat q(item);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

void emit(const ojson& j, const std::string& human) {
    if (structured)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

ojson word_json(const am::DigitWord& w) { return am::word_to_string(w); }

int cmd_eval(const std::string& input, const std::string& where) {
    am::Dfao d = resolve_dfao(input);
    am::Int lo, hi;
    auto dots = where.find("..");
    if (dots == std::string::npos) {
        lo = hi = am::Int(where);
    } else {
        lo = am::Int(where.substr(0, dots));
        hi = am::Int(where.substr(dots + 2));
    }
    if (lo < 0 || hi < lo) throw am::Error("usage", "range must be nonnegative and increasing");
    std::size_t count = am::to_u64(hi - lo + 1, "range size");
    std::vector<am::Value> vals(count);
    unsigned workers = std::min<std::size_t>(jobs, count);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers)
                vals[i] = d.eval(lo + static_cast<unsigned long>(i));
        });
    for (std::thread& th : pool) th.join();
    if (structured) {
        ojson j;
        j["format"] = "automult.eval/1";
        j["dfao"] = am::dfao_hash(d);
        ojson arr = ojson::array();
        for (std::size_t i = 0; i < count; ++i)
            arr.push_back(ojson{{"n", am::Int(lo + static_cast<unsigned long>(i)).get_str()},
                                {"value", vals[i].str()}});
        j["values"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const am::Value& v : vals) std::cout << v.display() << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& input, std::uint64_t n, unsigned long m_max,
                 unsigned long p_max, unsigned long alpha_max, const std::string& out_path) {
    am::Dfao d = resolve_dfao(input);
    am::ClassificationReport r = am::classify(d, n, m_max, p_max, alpha_max);
    std::string text = structured ? am::report_structured(r) : am::report_human(r);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out_path);
        if (!os) throw am::Error("io", "cannot write " + out_path);
        os << text;
    }
    bool settled = r.mode == am::ClassificationReport::Mode::Sparse ||
                   r.mode == am::ClassificationReport::Mode::Dense;
    return settled ? 0 : 1;
}

int cmd_fixtures() {
    ojson arr = ojson::array();
    std::ostringstream os;
    for (const am::Fixture& f : am::fixtures()) {
        arr.push_back(ojson{{"name", f.name},
                            {"base", f.dfao.base},
                            {"states", f.dfao.size()},
                            {"hash", am::dfao_hash(f.dfao)},
                            {"description", f.description}});
        os << f.name << "  (base " << f.dfao.base << ", " << f.dfao.size() << " states)  "
           << f.description << "\n";
    }
    emit(ojson{{"format", "automult.fixtures/1"}, {"fixtures", arr}}, os.str());
    return 0;
}

am::BasicAridSet make_arid(int base, const std::vector<std::string>& u,
                           const std::vector<std::string>& v,
                           const std::vector<std::string>& restrictions) {
    am::BasicAridSet a;
    a.base = base;
    a.u = parse_words(u, base);
    a.v = parse_words(v, base);
    a.restrictions = parse_restrictions(restrictions);
    am::check_shape(a);
    return a;
}

int cmd_arid_member(const am::BasicAridSet& a, const std::string& n_text) {
    am::Int n(n_text);
    bool in = am::arid_member(a, n);
    emit(ojson{{"format", "automult.arid.member/1"}, {"n", n.get_str()}, {"member", in}},
         std::string(in ? "member\n" : "not a member\n"));
    return 0;
}

int cmd_arid_enumerate(const am::BasicAridSet& a, const std::string& limit_text) {
    am::Int limit(limit_text);
    std::vector<am::Int> elems = am::arid_enumerate(a, limit);
    ojson arr = ojson::array();
    std::ostringstream os;
    for (const am::Int& e : elems) {
        arr.push_back(e.get_str());
        os << e.get_str() << "\n";
    }
    emit(ojson{{"format", "automult.arid.enumerate/1"}, {"limit", limit.get_str()},
               {"elements", arr}},
         os.str());
    return 0;
}

int cmd_arid_check(const am::BasicAridSet& a) {
    am::PatternCheck pc = am::forbidden_pattern_check(a);
    if (std::holds_alternative<am::GeometricProgression>(pc)) {
        const auto& g = std::get<am::GeometricProgression>(pc);
        std::ostringstream os;
        if (g.degenerate())
            os << "geometric progression: {" << g.x.get_str() << "}\n";
        else
            os << "geometric progression: " << g.x.get_str() << " * " << a.base << "^(" << g.c
               << " l)\n";
        emit(ojson{{"format", "automult.arid.check/1"},
                   {"kind", "geometric-progression"},
                   {"x", g.x.get_str()},
                   {"c", g.c}},
             os.str());
        return 0;
    }
    const auto& w = std::get<am::ForbiddenWitness>(pc);
    std::ostringstream os;
    os << "forbidden pattern: w=" << am::word_to_string(w.w) << " v=" << am::word_to_string(w.v)
       << " u=" << am::word_to_string(w.u) << "\n";
    emit(ojson{{"format", "automult.arid.check/1"},
               {"kind", "forbidden-pattern"},
               {"w", word_json(w.w)},
               {"v", word_json(w.v)},
               {"u", word_json(w.u)}},
         os.str());
    return 0;
}

int cmd_arid_rank(const am::BasicAridSet& a) {
    am::RankResult r = am::rank_of_basic(a);
    std::ostringstream os;
    if (r.certified)
        os << "rank " << r.rank << " (certified)\n";
    else
        os << "not certified: " << r.reason << "\n";
    emit(ojson{{"format", "automult.arid.rank/1"},
               {"certified", r.certified},
               {"rank", r.rank},
               {"reason", r.reason}},
         os.str());
    return r.certified ? 0 : 1;
}

int cmd_ggp_encode(int base, const std::string& coeffs, const std::vector<unsigned long>& alphas,
                   const std::vector<std::string>& restrictions) {
    am::Ggp g;
    g.base = base;
    g.coeffs = parse_coeffs(coeffs);
    g.restrictions = parse_restrictions(restrictions);
    am::GgpEncoding enc = am::ggp_encode(g, alphas);
    std::ostringstream os;
    os << "value " << enc.value.get_str() << "\n";
    os << "B " << enc.B << ", C " << enc.C << "\n";
    os << "u_0 " << am::word_to_string(enc.u[0]) << "\n";
    for (std::size_t i = 0; i < enc.v.size(); ++i) {
        os << "v_" << i + 1 << " " << am::word_to_string(enc.v[i]) << " ^ " << enc.l[i] << "\n";
        os << "u_" << i + 1 << " " << am::word_to_string(enc.u[i + 1]) << "\n";
    }
    os << "nondegenerate " << (am::nondegenerate(enc) ? "yes" : "no") << "\n";
    ojson ju = ojson::array(), jv = ojson::array(), jl = ojson::array();
    for (const am::DigitWord& w : enc.u) ju.push_back(word_json(w));
    for (const am::DigitWord& w : enc.v) jv.push_back(word_json(w));
    for (unsigned long li : enc.l) jl.push_back(li);
    emit(ojson{{"format", "automult.ggp.encode/1"},
               {"base", enc.base},
               {"B", enc.B},
               {"C", enc.C},
               {"value", enc.value.get_str()},
               {"u", ju},
               {"v", jv},
               {"l", jl},
               {"nondegenerate", am::nondegenerate(enc)}},
         os.str());
    return 0;
}

int cmd_ggp_constants(int base, const std::string& coeffs) {
    am::Ggp g;
    g.base = base;
    g.coeffs = parse_coeffs(coeffs);
    am::GgpConstants c = am::ggp_constants(g);
    std::ostringstream os;
    os << "B " << c.B << ", C " << c.C << "\n";
    emit(ojson{{"format", "automult.ggp.constants/1"}, {"B", c.B}, {"C", c.C}}, os.str());
    return 0;
}

int cmd_ipr(const std::string& n0, const std::vector<std::string>& sides, unsigned long mod,
            const std::string& limit_text) {
    am::IprSet s;
    s.n0 = am::Int(n0);
    for (const std::string& t : sides) s.sides.push_back(am::Int(t));
    am::check_ipr(s);
    std::vector<unsigned long> rs = am::ipr_residues(s, mod);
    std::ostringstream os;
    os << "residues mod " << mod << ":";
    ojson jr = ojson::array();
    for (unsigned long r : rs) {
        os << " " << r;
        jr.push_back(r);
    }
    os << "\n";
    ojson j{{"format", "automult.ipr/1"}, {"mod", mod}, {"residues", jr}};
    if (!limit_text.empty()) {
        am::Int limit(limit_text);
        ojson je = ojson::array();
        os << "elements <=" << " " << limit.get_str() << ":";
        for (const am::Int& e : am::ipr_elements(s))
            if (e <= limit) {
                os << " " << e.get_str();
                je.push_back(e.get_str());
            }
        os << "\n";
        j["elements"] = je;
    }
    emit(j, os.str());
    return 0;
}

int cmd_cert(int base, const std::string& w, const std::string& v, const std::string& u,
             const std::vector<unsigned long>& primes) {
    std::vector<am::Int> ps;
    for (unsigned long p : primes) ps.push_back(am::Int(p));
    am::SmallGcdCertificate cert = am::small_gcd_certificate(
        am::word_from_string(w, base), am::word_from_string(v, base),
        am::word_from_string(u, base), ps);
    std::ostringstream os;
    os << "D_0 " << cert.d0.get_str() << ", D_1 " << cert.d1.get_str() << ", D "
       << cert.d.get_str() << "\n";
    ojson entries = ojson::array();
    for (const auto& e : cert.entries) {
        os << "p " << e.p.get_str() << ": nu_p(D) " << e.nu_d << ", stride " << e.q.get_str()
           << "\n";
        entries.push_back(
            ojson{{"p", e.p.get_str()}, {"nu_d", e.nu_d}, {"q", e.q.get_str()}});
    }
    emit(ojson{{"format", "automult.cert/1"},
               {"base", cert.base},
               {"w", word_json(cert.w)},
               {"v", word_json(cert.v)},
               {"u", word_json(cert.u)},
               {"D0", cert.d0.get_str()},
               {"D1", cert.d1.get_str()},
               {"D", cert.d.get_str()},
               {"entries", entries}},
         os.str());
    return 0;
}

int cmd_character_list(unsigned long mod) {
    std::ostringstream os;
    ojson arr = ojson::array();
    for (const am::DirichletCharacter& chi : am::characters_mod(mod)) {
        os << chi.label() << " order " << chi.order() << (chi.principal() ? " principal" : "")
           << ":";
        ojson tab = ojson::array();
        for (unsigned long r = 0; r < mod; ++r) {
            os << " " << chi.at(r).display();
            tab.push_back(chi.at(r).str());
        }
        os << "\n";
        arr.push_back(ojson{{"label", chi.label()},
                            {"index", chi.index()},
                            {"order", chi.order()},
                            {"principal", chi.principal()},
                            {"table", tab}});
    }
    emit(ojson{{"format", "automult.characters/1"}, {"modulus", mod}, {"characters", arr}},
         os.str());
    return 0;
}

int cmd_character_mock(int k, unsigned long mod, const std::string& xi_text, unsigned long index,
                       const std::string& out_path) {
    unsigned long r = 0;
    am::Int pw = 1;
    while (pw < mod) {
        pw *= k;
        ++r;
    }
    if (pw != mod) throw am::Error("usage", "modulus must be a power of the base");
    am::MockCharacter mc{k, r, am::character_mod(mod, index), parse_value(xi_text)};
    am::Dfao d = am::mock_character_dfao(mc);
    std::string text = am::dfao_to_string(d);
    if (out_path.empty())
        std::cout << text;
    else
        am::save_dfao(d, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact evaluation and classification of multiplicative automatic sequences"};
    app.require_subcommand(1);
    std::string format = "human";
    app.add_option("--format", format, "output shape")
        ->check(CLI::IsMember({"human", "structured"}));
    app.add_option("--jobs", jobs, "worker threads for range scans")->check(CLI::Range(1u, 256u));

    std::function<int()> task;

    auto* eval = app.add_subcommand("eval", "evaluate a sequence at one index or a range");
    eval->fallthrough();
    std::string eval_input, eval_where;
    eval->add_option("dfao", eval_input, "fixture name or DFAO file")->required();
    eval->add_option("n", eval_where, "index n or range lo..hi")->required();
    eval->callback([&] { task = [&] { return cmd_eval(eval_input, eval_where); }; });

    auto* cls = app.add_subcommand("classify", "run the full sparse/dense classification");
    cls->fallthrough();
    std::string cls_input, cls_out;
    std::uint64_t cls_n = 1000000;
    unsigned long cls_mmax = 16, cls_pmax = 11, cls_amax = 100;
    cls->add_option("dfao", cls_input, "fixture name or DFAO file")->required();
    cls->add_option("--N", cls_n, "verification window");
    cls->add_option("--m-max", cls_mmax, "largest modulus tried");
    cls->add_option("--p-max", cls_pmax, "largest prime threshold tried");
    cls->add_option("--alpha-max", cls_amax, "prime power profile depth");
    cls->add_option("--out", cls_out, "write the report here instead of stdout");
    cls->callback([&] {
        task = [&] { return cmd_classify(cls_input, cls_n, cls_mmax, cls_pmax, cls_amax, cls_out); };
    });

    auto* fix = app.add_subcommand("fixtures", "list the built-in automata");
    fix->fallthrough();
    fix->callback([&] { task = [&] { return cmd_fixtures(); }; });

    auto* arid = app.add_subcommand("arid", "basic arid set operations");
    arid->fallthrough();
    arid->require_subcommand(1);
    int arid_base = 2;
    std::vector<std::string> arid_u, arid_v, arid_r;
    arid->add_option("--base", arid_base, "digit base")->required();
    arid->add_option("--u", arid_u, "islands u_0 .. u_r (use - for the empty word)")->required();
    arid->add_option("--v", arid_v, "pumps v_1 .. v_r");
    arid->add_option("--restrictions", arid_r, "offset:modulus per pump");
    auto* am_member = arid->add_subcommand("member", "decide membership");
    am_member->fallthrough();
    std::string arid_n;
    am_member->add_option("n", arid_n)->required();
    am_member->callback([&] {
        task = [&] { return cmd_arid_member(make_arid(arid_base, arid_u, arid_v, arid_r), arid_n); };
    });
    auto* am_enum = arid->add_subcommand("enumerate", "list members up to a bound");
    am_enum->fallthrough();
    std::string arid_limit;
    am_enum->add_option("limit", arid_limit)->required();
    am_enum->callback([&] {
        task = [&] {
            return cmd_arid_enumerate(make_arid(arid_base, arid_u, arid_v, arid_r), arid_limit);
        };
    });
    auto* am_check = arid->add_subcommand("check", "geometric progression or forbidden pattern");
    am_check->fallthrough();
    am_check->callback([&] {
        task = [&] { return cmd_arid_check(make_arid(arid_base, arid_u, arid_v, arid_r)); };
    });
    auto* am_rank = arid->add_subcommand("rank", "certify the rank of a block-shaped set");
    am_rank->fallthrough();
    am_rank->callback([&] {
        task = [&] { return cmd_arid_rank(make_arid(arid_base, arid_u, arid_v, arid_r)); };
    });

    auto* ggp = app.add_subcommand("ggp", "generalized geometric progressions");
    ggp->fallthrough();
    ggp->require_subcommand(1);
    int ggp_base = 2;
    std::string ggp_coeffs;
    ggp->add_option("--k", ggp_base, "digit base")->required();
    ggp->add_option("--coeffs", ggp_coeffs, "x_0,x_1,... as integers or p/q")->required();
    auto* ggp_enc = ggp->add_subcommand("encode", "slice one value into certified blocks");
    ggp_enc->fallthrough();
    std::vector<unsigned long> ggp_alphas;
    std::vector<std::string> ggp_restr;
    ggp_enc->add_option("--alphas", ggp_alphas, "exponents alpha_1 < ... < alpha_r")
        ->required()
        ->delimiter(',');
    ggp_enc->add_option("--restrictions", ggp_restr, "offset:modulus per exponent");
    ggp_enc->callback([&] {
        task = [&] { return cmd_ggp_encode(ggp_base, ggp_coeffs, ggp_alphas, ggp_restr); };
    });
    auto* ggp_con = ggp->add_subcommand("constants", "block length and spacing threshold");
    ggp_con->fallthrough();
    ggp_con->callback([&] { task = [&] { return cmd_ggp_constants(ggp_base, ggp_coeffs); }; });

    auto* ipr = app.add_subcommand("ipr", "incomplete-product residues and elements");
    ipr->fallthrough();
    std::string ipr_n0 = "0", ipr_limit;
    std::vector<std::string> ipr_sides;
    unsigned long ipr_mod = 2;
    ipr->add_option("--n0", ipr_n0, "base offset");
    ipr->add_option("--sides", ipr_sides, "positive sidelengths")->required()->delimiter(',');
    ipr->add_option("--mod", ipr_mod, "residue modulus")->required();
    ipr->add_option("--elements", ipr_limit, "also list elements up to this bound");
    ipr->callback([&] {
        task = [&] { return cmd_ipr(ipr_n0, ipr_sides, ipr_mod, ipr_limit); };
    });

    auto* cert = app.add_subcommand("cert", "divisor-bound certificate for a pumped family");
    cert->fallthrough();
    int cert_base = 2;
    std::string cert_w, cert_v, cert_u;
    std::vector<unsigned long> cert_primes;
    cert->add_option("--base", cert_base)->required();
    cert->add_option("--w", cert_w, "top word")->required();
    cert->add_option("--v", cert_v, "pump word")->required();
    cert->add_option("--u", cert_u, "bottom word")->required();
    cert->add_option("--primes", cert_primes, "primes to certify")->required()->delimiter(',');
    cert->callback([&] {
        task = [&] { return cmd_cert(cert_base, cert_w, cert_v, cert_u, cert_primes); };
    });

    auto* chr = app.add_subcommand("character", "Dirichlet characters and their automata");
    chr->fallthrough();
    chr->require_subcommand(1);
    auto* chr_list = chr->add_subcommand("list", "all characters mod m");
    chr_list->fallthrough();
    unsigned long chr_mod = 4;
    chr_list->add_option("--mod", chr_mod)->required();
    chr_list->callback([&] { task = [&] { return cmd_character_list(chr_mod); }; });
    auto* chr_mock = chr->add_subcommand("mock", "emit the automaton of a mock character");
    chr_mock->fallthrough();
    int mock_k = 2;
    unsigned long mock_mod = 4, mock_index = 1;
    std::string mock_xi = "1", mock_out;
    chr_mock->add_option("--k", mock_k, "digit base")->required();
    chr_mock->add_option("--mod", mock_mod, "character modulus, a power of the base")->required();
    chr_mock->add_option("--xi", mock_xi, "root of unity on base powers (int, p/q or zeta:d,e)");
    chr_mock->add_option("--index", mock_index, "character index within its modulus");
    chr_mock->add_option("--out", mock_out, "write the DFAO file here instead of stdout");
    chr_mock->callback([&] {
        task = [&] { return cmd_character_mock(mock_k, mock_mod, mock_xi, mock_index, mock_out); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    structured = format == "structured";
    try {
        return task();
    } catch (const am::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
