// One line per acceptance criterion; exit status 1 if any criterion fails.
#include "suq/verify.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#ifndef SUQ_GOLDEN_DIR
#define SUQ_GOLDEN_DIR "tests/golden"
#endif

using namespace suq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string sci(const Real& x) {
    std::ostringstream s;
    s.precision(2);
    s << std::scientific << static_cast<double>(x);
    return s.str();
}

HalfInt H(int t) { return HalfInt::from_twice(t); }

struct Outcome {
    bool pass = true;
    Real worst = 0;
    std::size_t cases = 0;
    std::size_t errors = 0;
    std::string detail;

    void absorb(const CheckResult& r) {
        cases += r.count;
        errors += r.errors;
        worst = std::max(worst, r.max_residual);
    }
};

bool report(int n, const std::string& title, bool pass, const std::string& detail) {
    std::cout << "criterion " << n << " " << (pass ? "PASS" : "FAIL") << "  " << title << ": " << detail << std::endl;
    return pass;
}

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& name) {
    for (const auto& r : rs)
        if (r.name == name) return r;
    throw std::runtime_error("missing check " + name);
}

bool c1() {
    const auto t0 = Clock::now();
    const Real tol("1e-40");
    Real worst = 0;
    std::size_t cases = 0;
    for (const char* qs : {"0.3", "0.5", "0.9"}) {
        const QContext ctx(qs, 50);
        PrecisionScope p(70);
        for (int t1 = 0; t1 <= 10; ++t1)
            for (int t2 = 0; t2 <= 10; ++t2) {
                CGPosLabel l{H(t1), H(t1 + 2), H(t2), H(t2 + 2), H(t1 + t2 + 2), H(t1 + t2 + 4)};
                for (CGMethod m : all_methods) {
                    worst = std::max(worst, Real(abs(cg_pos(l, m, ctx) - 1)));
                    ++cases;
                }
            }
        for (int tk = 0; tk <= 10; ++tk)
            for (int tj = 0; tj <= tk; ++tj) {
                CGMixedLabel l{H(tk), H(tk + 2), H(tj), H(-tj), H(tk - tj), H(tk - tj + 2)};
                for (CGMethod m : all_methods) {
                    worst = std::max(worst, Real(abs(cg_mixed(l, m, ctx) - 1)));
                    ++cases;
                }
            }
    }
    const double secs = seconds_since(t0);
    return report(1, "normalization", worst <= tol && secs < 1.0,
                  std::to_string(cases) + " evaluations, max |c-1| = " + sci(worst) + " (tol 1e-40), " +
                      std::to_string(secs) + " s (limit 1 s)");
}

bool c2() {
    const auto t0 = Clock::now();
    const QContext ctx("0.5", 50);
    const Real tol("1e-35");
    PrecisionScope p(70);
    std::mt19937_64 rng(20240601);
    Real worst = 0;
    std::size_t errors = 0;
    auto spread = [](const std::vector<Real>& v) {
        Real top = 0, w = 0;
        for (const auto& x : v) top = std::max(top, Real(abs(x)));
        if (top == 0) return Real(0);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) w = std::max(w, Real(abs(v[i] - v[j])));
        return Real(w / top);
    };
    for (int t = 0; t < 200; ++t) {
        try {
            CGPosLabel lp = random_pos_label(rng, 15);
            std::vector<Real> v;
            for (CGMethod m : all_methods) v.push_back(cg_pos(lp, m, ctx));
            worst = std::max(worst, spread(v));
            CGMixedLabel lm = random_mixed_label(rng, 15);
            std::vector<Real> w;
            for (CGMethod m : all_methods) w.push_back(cg_mixed(lm, m, ctx));
            worst = std::max(worst, spread(w));
        } catch (const std::exception&) {
            ++errors;
        }
    }
    const double secs = seconds_since(t0);
    return report(2, "five-way agreement", worst <= tol && errors == 0 && secs < 30.0,
                  "200 pos + 200 mixed labels, max pairwise relative difference " + sci(worst) + " (tol 1e-35), " +
                      std::to_string(errors) + " errors, " + std::to_string(secs) + " s (limit 30 s)");
}

bool c3() {
    const auto t0 = Clock::now();
    VerifyConfig cfg;
    cfg.max_mu = 12;
    auto rs = run_suite(Suite::oracle, cfg);
    Outcome o;
    for (const char* n : {"pos_vs_projection", "pos_vs_kernel", "mixed_vs_projection", "mixed_vs_kernel"}) o.absorb(find(rs, n));
    const double secs = seconds_since(t0);
    return report(3, "oracle equivalence", o.worst <= Real("1e-30") && o.errors == 0 && o.cases > 0 && secs < 120.0,
                  std::to_string(o.cases) + " comparisons with mu <= 12 at q = 0.5, max relative difference " + sci(o.worst) +
                      " (tol 1e-30), " + std::to_string(o.errors) + " errors, " + std::to_string(secs) + " s (limit 120 s)");
}

bool c4() {
    VerifyConfig cfg;
    cfg.ctx = QContext("0.7", 50);
    cfg.trials = 100;
    auto rs = run_suite(Suite::symmetry, cfg);
    const auto& r = find(rs, "q_inverse_swap");
    return report(4, "q <-> 1/q symmetry", r.max_residual <= Real("1e-35") && r.errors == 0 && r.count == 100,
                  std::to_string(r.count) + " labels at q = 0.7, max relative difference " + sci(r.max_residual) + " (tol 1e-35)");
}

bool c5() {
    VerifyConfig cfg;
    cfg.max_mu = 10;
    auto rs = run_suite(Suite::orthogonality, cfg);
    Outcome o;
    for (const char* n : {"first_kind_selection_rule_range", "second_kind"}) o.absorb(find(rs, n));
    const auto& printed = find(rs, "first_kind_printed_range");
    return report(5, "orthogonality", o.worst <= Real("1e-30") && o.errors == 0 && o.cases > 0,
                  std::to_string(o.cases) + " sums with mu <= 10, max deviation " + sci(o.worst) +
                      " (tol 1e-30); printed mu1 limit: " + printed.note);
}

bool c6() {
    VerifyConfig cfg;
    auto rs = run_suite(Suite::qhahn, cfg);
    Outcome id, orth;
    for (const char* fam : {"hahn_", "dual_"}) {
        for (const char* n : {"diffeq", "ttrr", "lowering", "raising"}) id.absorb(find(rs, std::string(fam) + n));
        orth.absorb(find(rs, std::string(fam) + "orthogonality"));
    }
    return report(6, "q-Hahn identities", id.worst <= Real("1e-35") && orth.worst <= Real("1e-30") && id.errors + orth.errors == 0,
                  std::to_string(id.cases) + " residuals (n <= 6, N <= 12, mixed-case parameters included), max " + sci(id.worst) +
                      " (tol 1e-35); " + std::to_string(orth.cases) + " inner products, max " + sci(orth.worst) + " (tol 1e-30)");
}

bool c7() {
    VerifyConfig cfg;
    cfg.trials = 100;
    auto rs = run_suite(Suite::qhahn, cfg);
    Outcome o;
    for (const char* n : {"connection_pos_hahn", "connection_pos_dual", "connection_mixed_hahn", "connection_mixed_dual"})
        o.absorb(find(rs, n));
    // the dual-connection sign must still match the frozen table
    std::size_t golden = 0, mismatched = 0;
    std::ifstream in(SUQ_GOLDEN_DIR "/q_hahn2_sign.json");
    if (in) {
        const auto g = nlohmann::json::parse(in);
        for (const auto& c : g.at("cases")) {
            auto t = c.at("labels").get<std::vector<int>>();
            CGPosLabel l{H(t[0]), H(t[1]), H(t[2]), H(t[3]), H(t[4]), H(t[5])};
            ++golden;
            if (pos_dual_sign(l) != c.at("sign").get<int>()) ++mismatched;
        }
    }
    return report(7, "connection formulas", o.worst <= Real("1e-30") && o.errors == 0 && o.cases == 400 && golden > 0 && mismatched == 0,
                  std::to_string(o.cases) + " labels over 4 connections, max relative difference " + sci(o.worst) +
                      " (tol 1e-30); golden dual sign " + std::to_string(golden - mismatched) + "/" + std::to_string(golden));
}

bool c8() {
    VerifyConfig cfg;
    cfg.trials = 100;
    auto rs = run_suite(Suite::recurrences, cfg);
    bool pass = true;
    std::string detail;
    for (const auto& r : rs) {
        const bool ok = r.max_residual <= Real("1e-25") && r.errors == 0;
        pass = pass && ok;
        detail += r.name + " max " + sci(r.max_residual) + (ok ? " ok" : " FAILS") + " (" + r.note + "); ";
    }
    return report(8, "mixed recurrences", pass, "100 interior labels, tol 1e-25: " + detail);
}

std::pair<int, std::string> run_cli(const std::string& args) {
    FILE* p = popen((std::string(SUQ_CLI_PATH) + " " + args + " 2>&1").c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool c9() {
    const char* configs[] = {
        "--format json --q 0.3 cg pos --k1 0:1 --k2 1/2 --mu 2:9/2",
        "--format csv cg mixed --k 1:2 --j 0:1 --mu 2:3 --m -1:1 --method hyp_c",
        "--format json --seed 17 verify symmetry --trials 20",
        "--format text --digits 40 qhahn dual --n 3 --a 0 --b 6 --c 1/2",
    };
    std::size_t same = 0, total = 0, bytes = 0;
    for (const char* c : configs) {
        auto a = run_cli(c), b = run_cli(c);
        ++total;
        bytes += a.second.size();
        if (a == b && !a.second.empty()) ++same;
    }
    return report(9, "CLI determinism", same == total,
                  std::to_string(same) + "/" + std::to_string(total) + " configurations byte-identical over two runs (" +
                      std::to_string(bytes) + " bytes)");
}

}  // namespace

int main() {
    int failed = 0;
    for (auto f : {c1, c2, c3, c4, c5, c6, c7, c8, c9}) {
        try {
            if (!f()) ++failed;
        } catch (const std::exception& e) {
            std::cout << "criterion error: " << e.what() << std::endl;
            ++failed;
        }
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
    return failed ? 1 : 0;
}
