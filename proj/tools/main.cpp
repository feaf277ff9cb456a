// suq: Clebsch-Gordan coefficients of su_q(1,1), verification suites, q-Hahn tables.
#include "suq/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

using namespace suq;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, usage = 1, domain = 2, verification = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Global {
    std::string q = "0.5";
    int digits = 50;
    std::string format = "text";
    std::uint64_t seed = 1;
    bool include_zeros = false;
};

// "v" or "lo:hi", inclusive, unit steps.
std::vector<HalfInt> half_range(const std::string& text, const std::string& flag) {
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) return {HalfInt::parse(text)};
        HalfInt lo = HalfInt::parse(text.substr(0, colon)), hi = HalfInt::parse(text.substr(colon + 1));
        if (!(hi - lo).is_integer()) throw UsageError(flag + ": range ends differ by a half-integer");
        std::vector<HalfInt> out;
        for (HalfInt v = lo; v <= hi; v += 1) out.push_back(v);
        return out;
    } catch (const DomainError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Rat parse_rat(const std::string& text, const std::string& flag) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        long long p = std::stoll(text.substr(0, slash), &used);
        if (used != text.substr(0, slash).size()) throw std::invalid_argument("");
        long long d = 1;
        if (slash != std::string::npos) {
            d = std::stoll(text.substr(slash + 1), &used);
            if (used != text.size() - slash - 1 || d <= 0) throw std::invalid_argument("");
        }
        return Rat(p, d);
    } catch (const std::logic_error&) {
        throw UsageError(flag + ": '" + text + "' is not an integer or p/d");
    }
}

std::vector<Rat> rat_range(const std::string& text, const std::string& flag) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return {parse_rat(text, flag)};
    Rat lo = parse_rat(text.substr(0, colon), flag), hi = parse_rat(text.substr(colon + 1), flag);
    if (!is_integer(hi - lo)) throw UsageError(flag + ": range ends must differ by an integer");
    std::vector<Rat> out;
    for (Rat v = lo; v <= hi; v += 1) out.push_back(v);
    return out;
}

QContext make_context(const Global& g) {
    if (g.digits < 20) throw UsageError("--digits must be >= 20");
    try {
        QContext ctx(g.q, g.digits);
        if (ctx.q() <= 0 || ctx.q() == 1) throw UsageError("--q must be positive and different from 1");
        return ctx;
    } catch (const DomainError& e) {
        throw UsageError(std::string("--q: ") + e.what());
    }
}

// ------------------------------------------------------------------ output

// One table: column names plus rows of already-formatted cells (json values keep their type).
struct Table {
    std::vector<std::string> columns;
    std::vector<json> rows;  // objects, possibly nested
};

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// Flattens nested objects one level ("labels" -> its members).
// Text output shows labels as half-integers; csv keeps the twice-values of the json schema.
std::vector<std::pair<std::string, json>> flatten(const json& row, bool halves) {
    std::vector<std::pair<std::string, json>> out;
    for (auto it = row.begin(); it != row.end(); ++it) {
        if (it->is_object())
            for (auto jt = it->begin(); jt != it->end(); ++jt)
                out.emplace_back(jt.key(), halves && it.key() == "labels" ? json(HalfInt::from_twice(jt->get<int>()).str()) : *jt);
        else
            out.emplace_back(it.key(), *it);
    }
    return out;
}

void emit(const Table& t, const std::string& format, std::ostream& os) {
    if (format == "json") {
        for (const auto& r : t.rows) os << r.dump() << '\n';
        return;
    }
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : t.rows) {
        auto flat = flatten(r, format == "text");
        if (header.empty())
            for (const auto& [k, v] : flat) header.push_back(k);
        std::vector<std::string> line;
        for (const auto& h : header) {
            auto it = std::find_if(flat.begin(), flat.end(), [&](const auto& p) { return p.first == h; });
            line.push_back(it == flat.end() ? "" : (it->second.is_string() ? it->second.get<std::string>() : it->second.dump()));
        }
        cells.push_back(std::move(line));
    }
    if (header.empty()) header = t.columns;
    if (format == "csv") {
        for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_cell(header[i]);
        os << '\n';
        for (const auto& line : cells) {
            for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << csv_cell(line[i]);
            os << '\n';
        }
        return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    auto put = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t i = 0; i < line.size(); ++i) {
            s += line[i];
            if (i + 1 < line.size()) s += std::string(width[i] - line[i].size() + 2, ' ');
        }
        os << s << '\n';
    };
    put(header);
    for (const auto& line : cells) put(line);
}

std::string short_sci(const Real& x) {
    if (x == 0) return "0";
    return x.str(3, std::ios_base::scientific);
}

// ----------------------------------------------------------------- cg

std::string pos_rule(const CGPosLabel& l) {
    if (!PosSeriesLabel{l.kappa1, l.mu1}.valid()) return "mu1 - kappa1 must be a positive integer";
    if (!PosSeriesLabel{l.kappa2, l.mu2}.valid()) return "mu2 - kappa2 must be a positive integer";
    if (l.kappa.twice() < 0) return "kappa must be >= 0";
    if (l.mu != l.mu1 + l.mu2) return "mu must equal mu1 + mu2";
    if (!(l.kappa - l.kappa1 - l.kappa2).is_integer() || l.kappa < l.kappa1 + l.kappa2 + 1)
        return "kappa must be kappa1 + kappa2 + 1 + k for integer k >= 0";
    return "mu - kappa must be a positive integer";
}

std::string mixed_rule(const CGMixedLabel& l) {
    if (!PosSeriesLabel{l.kappa, l.mu}.valid()) return "mu - kappa must be a positive integer";
    if (!FiniteRepLabel{l.j, l.m}.valid()) return "m must lie in -j..j with j - m integer";
    if (l.mu_p != l.mu + l.m) return "mu' must equal mu + m";
    HalfInt lo = l.kappa >= l.j ? l.kappa - l.j : l.j - l.kappa;
    if (l.kappa_p < lo || l.kappa_p > l.kappa + l.j || !(l.kappa + l.j - l.kappa_p).is_integer())
        return "kappa' must lie in |kappa-j| .. kappa+j in unit steps";
    return "mu' - kappa' must be a positive integer";
}

struct MethodChoice {
    std::string name;
    std::string provenance;
};

MethodChoice parse_cg_method(const std::string& m) {
    std::string low = m;
    std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });
    if (low == "sum_fwd" || low == "sum_rev" || low == "hyp_a" || low == "hyp_b" || low == "hyp_c") return {low, "closed_form"};
    if (low == "projection" || low == "kernel") return {low, "oracle"};
    if (low == "hahn" || low == "dual") return {low, "polynomial"};
    throw UsageError("--method: unknown method '" + m + "' (sum_fwd, sum_rev, hyp_a, hyp_b, hyp_c, projection, kernel, hahn, dual)");
}

Real eval_pos(const CGPosLabel& l, const std::string& m, const QContext& ctx) {
    if (m == "projection") return cg_oracle(l, ctx);
    if (m == "kernel") return cg_oracle_kernel(l, ctx);
    if (m == "hahn") return cg_from_polynomials(Connection::pos_hahn, l, ctx);
    if (m == "dual") return cg_from_polynomials(Connection::pos_dual, l, ctx);
    return cg_pos(l, parse_method(m), ctx);
}

Real eval_mixed(const CGMixedLabel& l, const std::string& m, const QContext& ctx) {
    if (m == "projection") return cg_oracle(l, ctx);
    if (m == "kernel") return cg_oracle_kernel(l, ctx);
    if (m == "hahn") return cg_from_polynomials(Connection::mixed_hahn, l, ctx);
    if (m == "dual") return cg_from_polynomials(Connection::mixed_dual, l, ctx);
    return cg_mixed(l, parse_method(m), ctx);
}

json record(const std::string& kind, const std::vector<std::pair<std::string, HalfInt>>& labels, const MethodChoice& mc,
            const QContext& ctx, const std::string& value, const std::string& provenance) {
    json r;
    r["kind"] = kind;
    json lj = json::object();
    for (const auto& [k, v] : labels) lj[k] = v.twice();
    r["labels"] = lj;
    r["method"] = mc.name;
    r["q"] = ctx.q_text();
    r["digits"] = ctx.digits();
    r["value"] = value;
    r["provenance"] = provenance;
    return r;
}

struct CgArgs {
    std::string k1, k2, k, mu, mu1;          // pos
    std::string j, m, kp;                    // mixed (k and mu shared)
    std::string method = "sum_fwd";
};

int cmd_cg_pos(const Global& g, const CgArgs& a) {
    const QContext ctx = make_context(g);
    const MethodChoice mc = parse_cg_method(a.method);
    if (a.k1.empty() || a.k2.empty() || a.mu.empty()) throw UsageError("cg pos needs --k1, --k2 and --mu");
    std::vector<CGPosLabel> cands;
    for (HalfInt k1 : half_range(a.k1, "--k1"))
        for (HalfInt k2 : half_range(a.k2, "--k2"))
            for (HalfInt mu : half_range(a.mu, "--mu")) {
                if (k1.twice() < 0 || k2.twice() < 0) throw DomainError("kappa1 and kappa2 must be >= 0");
                if (!(mu - k1 - k2).is_integer()) throw DomainError("mu - kappa1 - kappa2 must be an integer");
                std::vector<HalfInt> ks, m1s;
                if (!a.k.empty()) ks = half_range(a.k, "--k");
                if (!a.mu1.empty()) m1s = half_range(a.mu1, "--mu1");
                if (!ks.empty() && !(ks[0] - k1 - k2).is_integer())
                    throw DomainError("kappa - kappa1 - kappa2 must be an integer");
                if (!m1s.empty() && !(m1s[0] - k1).is_integer()) throw DomainError("mu1 - kappa1 must be an integer");
                if (!g.include_zeros) {
                    for (const auto& l : enumerate_couplings_pos(k1, k2, mu)) {
                        if (!ks.empty() && std::find(ks.begin(), ks.end(), l.kappa) == ks.end()) continue;
                        if (!m1s.empty() && std::find(m1s.begin(), m1s.end(), l.mu1) == m1s.end()) continue;
                        cands.push_back(l);
                    }
                    continue;
                }
                if (ks.empty())
                    for (HalfInt k = k1 + k2 + 1; k + 1 <= mu; k += 1) ks.push_back(k);
                if (m1s.empty())
                    for (HalfInt m1 = k1 + 1; m1 + k2 + 1 <= mu; m1 += 1) m1s.push_back(m1);
                for (HalfInt k : ks)
                    for (HalfInt m1 : m1s) cands.push_back(CGPosLabel{k1, m1, k2, mu - m1, k, mu});
            }
    std::sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) { return x.twice() < y.twice(); });
    cands.erase(std::unique(cands.begin(), cands.end(), [](const auto& x, const auto& y) { return x.twice() == y.twice(); }),
                cands.end());
    Table t;
    for (const auto& l : cands) {
        std::vector<std::pair<std::string, HalfInt>> labels{{"kappa1", l.kappa1}, {"mu1", l.mu1}, {"kappa2", l.kappa2},
                                                             {"mu2", l.mu2},       {"kappa", l.kappa}, {"mu", l.mu}};
        if (!l.admissible()) {
            json r = record("pos", labels, mc, ctx, "0", mc.provenance);
            r["note"] = "selection rule: " + pos_rule(l);
            t.rows.push_back(r);
            continue;
        }
        t.rows.push_back(record("pos", labels, mc, ctx, format_real(eval_pos(l, mc.name, ctx), ctx.digits()), mc.provenance));
    }
    emit(t, g.format, std::cout);
    return ok;
}

int cmd_cg_mixed(const Global& g, const CgArgs& a) {
    const QContext ctx = make_context(g);
    const MethodChoice mc = parse_cg_method(a.method);
    if (a.k.empty() || a.j.empty() || a.mu.empty() || a.m.empty()) throw UsageError("cg mixed needs --k, --j, --mu and --m");
    std::vector<CGMixedLabel> cands;
    for (HalfInt k : half_range(a.k, "--k"))
        for (HalfInt j : half_range(a.j, "--j"))
            for (HalfInt mu : half_range(a.mu, "--mu"))
                for (HalfInt m : half_range(a.m, "--m")) {
                    if (k.twice() < 0 || j.twice() < 0) throw DomainError("kappa and j must be >= 0");
                    if (!(mu - k).is_integer()) throw DomainError("mu - kappa must be an integer");
                    if (!(j - m).is_integer()) throw DomainError("j - m must be an integer");
                    std::vector<HalfInt> kps;
                    if (!a.kp.empty()) kps = half_range(a.kp, "--kp");
                    if (!kps.empty() && !(k + j - kps[0]).is_integer())
                        throw DomainError("kappa + j - kappa' must be an integer");
                    if (g.include_zeros) {
                        if (kps.empty()) kps = coupled_kappas_mixed(k, j);
                        for (HalfInt kp : kps) cands.push_back(CGMixedLabel{k, mu, j, m, kp, mu + m});
                        continue;
                    }
                    if (!PosSeriesLabel{k, mu}.valid() || !FiniteRepLabel{j, m}.valid()) continue;
                    for (const auto& l : enumerate_couplings_mixed(k, mu, j, m))
                        if (kps.empty() || std::find(kps.begin(), kps.end(), l.kappa_p) != kps.end()) cands.push_back(l);
                }
    std::sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) { return x.twice() < y.twice(); });
    cands.erase(std::unique(cands.begin(), cands.end(), [](const auto& x, const auto& y) { return x.twice() == y.twice(); }),
                cands.end());
    Table t;
    for (const auto& l : cands) {
        std::vector<std::pair<std::string, HalfInt>> labels{{"kappa", l.kappa}, {"mu", l.mu},           {"j", l.j},
                                                             {"m", l.m},         {"kappa_p", l.kappa_p}, {"mu_p", l.mu_p}};
        if (!l.admissible()) {
            json r = record("mixed", labels, mc, ctx, "0", mc.provenance);
            r["note"] = "selection rule: " + mixed_rule(l);
            t.rows.push_back(r);
            continue;
        }
        t.rows.push_back(record("mixed", labels, mc, ctx, format_real(eval_mixed(l, mc.name, ctx), ctx.digits()), mc.provenance));
    }
    emit(t, g.format, std::cout);
    return ok;
}

// -------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite;
    int trials = 50;
    std::string max_mu = "12";
    std::optional<std::string> tolerance;
};

int cmd_verify(const Global& g, const VerifyArgs& a) {
    VerifyConfig cfg{make_context(g), a.trials, g.seed, HalfInt(12)};
    if (a.trials < 1) throw UsageError("--trials must be >= 1");
    try {
        cfg.max_mu = HalfInt::parse(a.max_mu);
    } catch (const DomainError& e) {
        throw UsageError(std::string("--max-mu: ") + e.what());
    }
    Suite suite;
    try {
        suite = parse_suite(a.suite);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    std::optional<Real> tol;
    if (a.tolerance) {
        try {
            tol = parse_real(*a.tolerance);
        } catch (const std::exception&) {
            throw UsageError("--tolerance: '" + *a.tolerance + "' is not a decimal number");
        }
    }
    auto results = run_suite(suite, cfg);
    bool all_pass = true;
    Table t;
    for (auto& r : results) {
        if (tol) {
            r.tolerance = *tol;
            r.pass = r.errors == 0 && r.max_residual <= *tol;
        }
        if (!r.finding && !r.pass) all_pass = false;
        json row;
        row["suite"] = r.suite;
        row["check"] = r.name;
        row["status"] = r.finding ? (r.pass ? "confirmed" : "finding") : (r.pass ? "pass" : "fail");
        row["count"] = r.count;
        row["skipped"] = r.skipped;
        row["max_residual"] = short_sci(r.max_residual);
        row["tolerance"] = short_sci(r.tolerance);
        row["note"] = r.note;
        t.rows.push_back(row);
    }
    emit(t, g.format, std::cout);
    return all_pass ? ok : verification;
}

// --------------------------------------------------------------- qhahn

struct QhahnArgs {
    int n = 0;
    int N = 1;
    std::string alpha = "0", beta = "0", a = "0", b = "1", c = "0";
    std::string s;
    std::string normalization = "monic";
};

template <class F>
std::string maybe(F&& f, const QContext& ctx) {
    try {
        return format_real(f(), ctx.digits());
    } catch (const DomainError&) {
        return "";
    }
}

int cmd_qhahn(const Global& g, const QhahnArgs& a, bool dual) {
    const QContext ctx = make_context(g);
    if (a.normalization != "monic" && a.normalization != "printed")
        throw UsageError("--normalization must be monic or printed");
    const bool printed = a.normalization == "printed";
    Table t;
    auto base = [&](const std::string& kind) {
        json r;
        r["kind"] = kind;
        return r;
    };
    if (!dual) {
        HahnSpec sp{a.n, a.N, parse_rat(a.alpha, "--alpha"), parse_rat(a.beta, "--beta")};
        sp.validate();
        std::vector<Rat> ss = a.s.empty() ? rat_range("0:" + std::to_string(a.N - 1), "--s") : rat_range(a.s, "--s");
        const std::string d2 = maybe([&] { return hahn_norm2(sp, ctx); }, ctx);
        for (const Rat& s : ss) {
            json r = base("hahn");
            r["params"] = json{{"n", sp.n}, {"N", sp.N}, {"alpha", rat_str(sp.alpha)}, {"beta", rat_str(sp.beta)}};
            r["s"] = rat_str(s);
            r["x"] = format_real(adaptive(ctx, [&](const QArith& A) { Sum v; v.add(hahn_lattice(A, s)); return v; }), ctx.digits());
            r["rho"] = maybe([&] { return hahn_weight(sp, s, ctx); }, ctx);
            r["d2"] = d2;
            r["value"] = format_real(printed ? adaptive(ctx, [&](const QArith& A) { return hahn_printed(A, sp, s); })
                                             : hahn_eval(sp, s, ctx),
                                     ctx.digits());
            r["normalization"] = a.normalization;
            r["orthogonal"] = sp.orthogonal();
            r["q"] = ctx.q_text();
            r["digits"] = ctx.digits();
            r["provenance"] = "polynomial";
            t.rows.push_back(r);
        }
    } else {
        DualHahnSpec sp{a.n, parse_rat(a.a, "--a"), parse_rat(a.b, "--b"), parse_rat(a.c, "--c")};
        sp.validate();
        std::vector<Rat> ss;
        if (a.s.empty())
            for (Rat s = sp.a; s < sp.b; s += 1) ss.push_back(s);
        else
            ss = rat_range(a.s, "--s");
        const std::string d2 = maybe([&] { return dual_norm2(sp, ctx); }, ctx);
        for (const Rat& s : ss) {
            json r = base("dual");
            r["params"] = json{{"n", sp.n}, {"a", rat_str(sp.a)}, {"b", rat_str(sp.b)}, {"c", rat_str(sp.c)}};
            r["s"] = rat_str(s);
            r["x"] = format_real(adaptive(ctx, [&](const QArith& A) { Sum v; v.add(dual_lattice(A, s)); return v; }), ctx.digits());
            r["rho"] = maybe([&] { return dual_weight(sp, s, ctx); }, ctx);
            r["d2"] = d2;
            r["value"] = format_real(printed ? adaptive(ctx, [&](const QArith& A) { return dual_printed(A, sp, s); })
                                             : dual_hahn_eval(sp, s, ctx),
                                     ctx.digits());
            r["normalization"] = a.normalization;
            r["orthogonal"] = sp.orthogonal();
            r["q"] = ctx.q_text();
            r["digits"] = ctx.digits();
            r["provenance"] = "polynomial";
            t.rows.push_back(r);
        }
    }
    emit(t, g.format, std::cout);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clebsch-Gordan coefficients of su_q(1,1)"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--q", g.q, "deformation parameter, exact decimal")->capture_default_str();
    app.add_option("--digits", g.digits, "significant digits of results")->capture_default_str();
    app.add_option("--format", g.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    app.add_option("--seed", g.seed, "seed of randomized suites")->capture_default_str();
    app.add_flag("--include-zeros", g.include_zeros, "emit inadmissible labels in the requested ranges with value 0");
    app.fallthrough();

    CgArgs cg;
    auto* cgc = app.add_subcommand("cg", "coefficient tables");
    cgc->require_subcommand(1);
    cgc->fallthrough();
    auto* pos = cgc->add_subcommand("pos", "positive x positive series");
    pos->add_option("--k1", cg.k1, "kappa1 (value or lo:hi; integers or p/2)");
    pos->add_option("--k2", cg.k2, "kappa2");
    pos->add_option("--k", cg.k, "coupled kappa (default: all)");
    pos->add_option("--mu", cg.mu, "total weight mu");
    pos->add_option("--mu1", cg.mu1, "first weight (default: all)");
    pos->add_option("--method", cg.method, "sum_fwd|sum_rev|hyp_a|hyp_b|hyp_c|projection|kernel|hahn|dual")->capture_default_str();
    pos->fallthrough();
    auto* mixed = cgc->add_subcommand("mixed", "positive series x finite representation");
    mixed->add_option("--k", cg.k, "kappa");
    mixed->add_option("--mu", cg.mu, "mu");
    mixed->add_option("--j", cg.j, "j");
    mixed->add_option("--m", cg.m, "m");
    mixed->add_option("--kp", cg.kp, "coupled kappa' (default: all)");
    mixed->add_option("--method", cg.method, "sum_fwd|sum_rev|hyp_a|hyp_b|hyp_c|projection|kernel|hahn|dual")->capture_default_str();
    mixed->fallthrough();

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", va.suite, "identities|orthogonality|symmetry|recurrences|oracle|qhahn|all")->required();
    ver->add_option("--trials", va.trials, "random cases per randomized check")->capture_default_str();
    ver->add_option("--max-mu", va.max_mu, "largest weight for exhaustive oracle checks")->capture_default_str();
    ver->add_option("--tolerance", va.tolerance, "override every tolerance");
    ver->fallthrough();

    QhahnArgs qa;
    auto* qh = app.add_subcommand("qhahn", "q-Hahn and dual q-Hahn tables");
    qh->require_subcommand(1);
    qh->fallthrough();
    auto* hahn = qh->add_subcommand("hahn", "h_n^{alpha,beta}(s,N)_q");
    hahn->add_option("--n", qa.n)->capture_default_str();
    hahn->add_option("--N", qa.N)->capture_default_str();
    hahn->add_option("--alpha", qa.alpha)->capture_default_str();
    hahn->add_option("--beta", qa.beta)->capture_default_str();
    hahn->add_option("--s", qa.s, "s or lo:hi (default 0:N-1)");
    hahn->add_option("--normalization", qa.normalization, "monic | printed")->capture_default_str();
    hahn->fallthrough();
    auto* dual = qh->add_subcommand("dual", "W_n^{(c)}(s,a,b)_q");
    dual->add_option("--n", qa.n)->capture_default_str();
    dual->add_option("--a", qa.a)->capture_default_str();
    dual->add_option("--b", qa.b)->capture_default_str();
    dual->add_option("--c", qa.c)->capture_default_str();
    dual->add_option("--s", qa.s, "s or lo:hi (default a:b-1)");
    dual->add_option("--normalization", qa.normalization, "monic | printed")->capture_default_str();
    dual->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }
    try {
        if (*pos) return cmd_cg_pos(g, cg);
        if (*mixed) return cmd_cg_mixed(g, cg);
        if (*ver) return cmd_verify(g, va);
        if (*hahn) return cmd_qhahn(g, qa, false);
        if (*dual) return cmd_qhahn(g, qa, true);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return domain;
    }
    return usage;
}
