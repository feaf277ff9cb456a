// Numerical verification suites.
#include "suq/verify.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>

namespace suq {

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::identities: return "identities";
        case Suite::orthogonality: return "orthogonality";
        case Suite::symmetry: return "symmetry";
        case Suite::recurrences: return "recurrences";
        case Suite::oracle: return "oracle";
        case Suite::qhahn: return "qhahn";
        case Suite::all: return "all";
    }
    return "?";
}

Suite parse_suite(const std::string& name) {
    for (Suite s : {Suite::identities, Suite::orthogonality, Suite::symmetry, Suite::recurrences, Suite::oracle,
                    Suite::qhahn, Suite::all})
        if (suite_name(s) == name) return s;
    throw DomainError("unknown suite '" + name + "'");
}

Real rel_diff(const Real& a, const Real& b) {
    Real m = std::max(Real(abs(a)), Real(abs(b)));
    return m == 0 ? Real(0) : Real(abs(a - b) / m);
}

Real tolerance_for(const QContext& ctx, int slack) { return pow(Real(10), -(ctx.digits() - slack)); }

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
    // modulo draw keeps the sequence independent of the standard library's distribution code
    if (hi <= lo) return lo;
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

}  // namespace

CGPosLabel random_pos_label(std::mt19937_64& rng, int max_twice) {
    if (max_twice < 2) throw DomainError("max_twice must be >= 2");
    const int t1 = uniform(rng, 0, max_twice - 2);
    const int t2 = uniform(rng, 0, max_twice - 2);
    const int m1 = t1 + 2 + 2 * uniform(rng, 0, (max_twice - t1 - 2) / 2);
    const int m2 = t2 + 2 + 2 * uniform(rng, 0, (max_twice - t2 - 2) / 2);
    const int d = uniform(rng, 0, (m1 + m2 - t1 - t2 - 4) / 2);
    const int tk = t1 + t2 + 2 + 2 * d;
    return CGPosLabel{H(t1), H(m1), H(t2), H(m2), H(tk), H(m1 + m2)};
}

CGMixedLabel random_mixed_label(std::mt19937_64& rng, int max_twice) {
    if (max_twice < 2) throw DomainError("max_twice must be >= 2");
    for (;;) {
        const int tk = uniform(rng, 0, max_twice - 2);
        const int tj = uniform(rng, 0, max_twice);
        const int tm = -tj + 2 * uniform(rng, 0, tj);
        const int tmu = tk + 2 + 2 * uniform(rng, 0, (max_twice - tk - 2) / 2);
        const int lo = std::abs(tk - tj);
        const int tkp = lo + 2 * uniform(rng, 0, (tk + tj - lo) / 2);
        CGMixedLabel l{H(tk), H(tmu), H(tj), H(tm), H(tkp), H(tmu + tm)};
        if (l.admissible()) return l;
    }
}

CGMixedLabel random_interior_mixed_label(std::mt19937_64& rng, int max_twice) {
    for (int tries = 0; tries < 100000; ++tries) {
        CGMixedLabel l = random_mixed_label(rng, max_twice);
        const HalfInt lo = l.kappa >= l.j ? l.kappa - l.j : l.j - l.kappa;
        if (l.m + 1 <= l.j && l.m - 1 >= -l.j && l.kappa_p - 1 >= lo && l.kappa_p + 1 <= l.kappa + l.j &&
            l.mu_p - 1 >= l.kappa_p + 2)
            return l;
    }
    throw DomainError("no interior mixed label within the requested size");
}

namespace {

std::string label_str(const CGPosLabel& l) {
    return "<" + l.kappa1.str() + " " + l.mu1.str() + ", " + l.kappa2.str() + " " + l.mu2.str() + " | " +
           l.kappa.str() + " " + l.mu.str() + ">";
}

std::string label_str(const CGMixedLabel& l) {
    return "<" + l.kappa.str() + " " + l.mu.str() + ", " + l.j.str() + " " + l.m.str() + " | " + l.kappa_p.str() +
           " " + l.mu_p.str() + ">";
}

std::string sci(const Real& x) {
    std::ostringstream os;
    os << std::scientific;
    os.precision(2);
    os << static_cast<double>(x);
    return os.str();
}

// Accumulates residuals for one named check.
class Check {
public:
    Check(std::string suite, std::string name, Real tol) {
        r_.suite = std::move(suite);
        r_.name = std::move(name);
        r_.tolerance = std::move(tol);
    }
    void add(const Real& residual, const std::string& where = "") {
        ++r_.count;
        if (residual > r_.max_residual || (boost::multiprecision::isnan(residual) && !nan_)) {
            r_.max_residual = residual;
            worst_ = where;
            nan_ = boost::multiprecision::isnan(residual);
        }
    }
    void fail(const std::string& why) {
        ++r_.count;
        errors_.push_back(why);
    }
    void skip() { ++r_.skipped; }
    CheckResult done(bool finding = false, std::string note = "") {
        r_.finding = finding;
        r_.errors = errors_.size() + (nan_ ? 1 : 0);
        r_.pass = r_.errors == 0 && r_.max_residual <= r_.tolerance;
        if (!errors_.empty()) note += (note.empty() ? "" : "; ") + std::to_string(errors_.size()) + " errors, first: " + errors_.front();
        if (!r_.pass && !worst_.empty()) note += (note.empty() ? "" : "; ") + std::string("worst at ") + worst_;
        r_.note = note;
        return r_;
    }

private:
    CheckResult r_;
    std::string worst_;
    bool nan_ = false;
    std::vector<std::string> errors_;
};

template <class F>
void guarded(Check& c, const std::string& where, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        c.fail(where + ": " + e.what());
    }
}

// ---------------------------------------------------------------- identities

void identities(const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    const QContext& ctx = cfg.ctx;
    const std::string S = "identities";
    std::mt19937_64 rng(cfg.seed);
    const int work = ctx.digits() + 30;

    {
        Check c(S, "qnum_symmetry", tolerance_for(ctx, 10));
        const QContext inv = ctx.inverse();
        for (int t = 0; t < cfg.trials; ++t) {
            Rat x(uniform(rng, -40, 40), 2);
            c.add(rel_diff(qnum(x, ctx), qnum(x, inv)), rat_str(x));
        }
        out.push_back(c.done());
    }
    {
        Check c(S, "qpoch_product", tolerance_for(ctx, 10));
        for (int t = 0; t < cfg.trials; ++t) {
            Rat a(uniform(rng, -30, 30), uniform(rng, 1, 4));
            int n = uniform(rng, 0, 20), m = uniform(rng, 0, 20);
            Real lhs = qpoch(a, n, ctx) * qpoch(a + n, m, ctx);
            Real rhs = qpoch(a, n + m, ctx);
            Real scale = abs(rhs);
            c.add(scale == 0 ? Real(abs(lhs)) : rel_diff(lhs, rhs), rat_str(a));
        }
        out.push_back(c.done());
    }
    {
        // sum_r (-1)^r [c-r]!/([r]![b-r]![n-r]!) q^{+-(b-c+n-1)r}, both b<c and b>c
        Check lo(S, "chu_vandermonde_b_lt_c", tolerance_for(ctx, 10));
        Check hi(S, "chu_vandermonde_b_gt_c", tolerance_for(ctx, 10));
        Check s3(S, "sum3_equiv", tolerance_for(ctx, 10));
        Check h2(S, "sum2_hyper_form", tolerance_for(ctx, 10));
        Check h3(S, "sum3_hyper_form", tolerance_for(ctx, 10));
        // the alternating sums cancel heavily away from q = 1
        PrecisionScope scope(work + 100);
        const QArith& A = arith(ctx.q(), work + 100);
        for (int t = 0; t < cfg.trials; ++t) {
            const int n = uniform(rng, 0, 8);
            const int b = n + 1 + uniform(rng, 0, 8);
            int c = n + 1 + uniform(rng, 0, 8);
            if (c == b) c = b + 1;
            const std::string where = "n=" + std::to_string(n) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
            for (int pm : {1, -1}) {
                Sum s;
                for (int r = 0; r <= n; ++r) {
                    Real term = A.fact(c - r) / (A.fact(r) * A.fact(b - r) * A.fact(n - r)) * A.pow(Rat(pm * (b - c + n - 1) * r));
                    s.add(r % 2 ? Real(-term) : term);
                }
                // 1/[c-b-n]! vanishes for negative arguments
                Real rhs = b < c ? (c - b - n < 0 ? Real(0) : Real(A.fact(c - n) * A.fact(c - b) / (A.fact(n) * A.fact(b) * A.fact(c - b - n))))
                                 : detail::neg1pow(n) * A.fact(c - n) * A.fact(b + n - c - 1) / (A.fact(b) * A.fact(n) * A.fact(b - c - 1));
                rhs *= A.pow(Rat(pm * b * n));
                (b < c ? lo : hi).add(rhs == 0 ? Real(abs(s.value) / s.scale) : rel_diff(s.value, rhs), where);

                Sum s3sum;
                for (int r = 0; r <= n; ++r)
                    s3sum.add(A.fact(c - r) * A.fact(b + r - 1) / (A.fact(r) * A.fact(n - r)) * A.pow(Rat(pm * (b + c - n + 1) * r)));
                Real r3 = A.fact(c + b) * A.fact(c - n) * A.fact(b - 1) / (A.fact(n) * A.fact(b + c - n)) * A.pow(Rat(pm * b * n));
                s3.add(rel_diff(s3sum.value, r3), where);

                if (b < c) {
                    Sum f = A.hyper({Rat(-n), Rat(-b)}, {Rat(-c)}, A.pow(Rat(pm * (b - c + n - 1))));
                    Real want = c - b - n < 0 ? Real(0)
                                              : Real(A.fact(c - n) * A.fact(c - b) / (A.fact(c) * A.fact(c - b - n)) * A.pow(Rat(pm * b * n)));
                    h2.add(want == 0 ? Real(abs(f.value) / f.scale) : rel_diff(f.value, want), where);
                }
                Sum g = A.hyper({Rat(-n), Rat(b)}, {Rat(-c)}, A.pow(Rat(pm * (b + c - n + 1))));
                Real want3 = A.fact(c - n) * A.fact(b + c) / (A.fact(c) * A.fact(b + c - n)) * A.pow(Rat(pm * b * n));
                h3.add(rel_diff(g.value, want3), where);
            }
        }
        for (Check* k : {&lo, &hi, &s3, &h2, &h3}) out.push_back(k->done());
    }
    {
        Check c(S, "transformation_3f2", tolerance_for(ctx, 10));
        PrecisionScope scope(work);
        const QArith& A = arith(ctx.q(), work);
        for (int t = 0; t < cfg.trials; ++t) {
            // thirds and odd quarters keep every lower parameter off the integers
            const int n = uniform(rng, 0, 6);
            const Rat a(3 * uniform(rng, -4, 4) + 1, 3), b(3 * uniform(rng, -4, 4) + 1, 3);
            const Rat d(2 * uniform(rng, -4, 4) + 1, 4), e(2 * uniform(rng, -4, 4) + 1, 4);
            for (int pm : {1, -1}) {
                Sum lhs = A.hyper({Rat(-n), a, b}, {d, e}, A.pow(pm * (a + b - n - d - e + 1)));
                Sum rhs = A.hyper({Rat(-n), a, d - b}, {d, a - e - n + 1}, A.pow(pm * (b - e)));
                Real r = A.pow(pm * a * n) * A.poch(e - a, n) / A.poch(e, n) * rhs.value;
                c.add(abs(lhs.value - r) / std::max(lhs.scale, Real(abs(r))),
                      "n=" + std::to_string(n) + " a=" + rat_str(a) + " b=" + rat_str(b) + " d=" + rat_str(d) + " e=" + rat_str(e));
            }
        }
        out.push_back(c.done());
    }
    {
        Check pw(S, "kpm_power_vs_iterated", tolerance_for(ctx, 10));
        Check mw(S, "minimal_weight_reconstruction", tolerance_for(ctx, 10));
        Check cs(S, "casimir_reflection", tolerance_for(ctx, 10));
        for (int t = 0; t < cfg.trials; ++t) {
            const HalfInt k = H(uniform(rng, 0, 12));
            const HalfInt mu = k + 1 + uniform(rng, 0, 8);
            const int r = uniform(rng, 0, 6);
            const std::string where = "kappa=" + k.str() + " mu=" + mu.str() + " r=" + std::to_string(r);
            for (Sign sg : {Sign::plus, Sign::minus}) {
                PosSeriesLabel cur{k, mu};
                Real iter(1);
                for (int i = 0; i < r; ++i) {
                    auto step = kpm_action(sg, cur, ctx);
                    iter *= step.coefficient;
                    if (step.annihilated) break;
                    cur = step.label;
                }
                pw.add(rel_diff(kpm_power_coeff(sg, r, PosSeriesLabel{k, mu}, ctx).coefficient, iter), where);
            }
            {
                PrecisionScope scope(work);
                const QArith& A = arith(ctx.q(), work);
                Real norm = A.sqrt(A.fact(2 * R(k) + 1) / (A.fact(R(mu + k)) * A.fact(R(mu - k) - 1)));
                Real coef = kpm_power_coeff(Sign::plus, (mu - k - 1).to_int(), PosSeriesLabel{k, k + 1}, ctx).coefficient;
                mw.add(rel_diff(norm * coef, Real(1)), where);
            }
            cs.add(rel_diff(casimir_eigenvalue(R(k), ctx), casimir_eigenvalue(-R(k) - 1, ctx)), where);
        }
        for (Check* k : {&pw, &mw, &cs}) out.push_back(k->done());
    }
    {
        Check cp(S, "five_way_pos", tolerance_for(ctx, 12));
        Check cm(S, "five_way_mixed", tolerance_for(ctx, 12));
        auto spread = [](const std::vector<Real>& v) {
            Real top(0), worst(0);
            for (const auto& x : v) top = std::max(top, Real(abs(x)));
            if (top == 0) return Real(0);
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j) worst = std::max(worst, Real(abs(v[i] - v[j])));
            return Real(worst / top);
        };
        for (int t = 0; t < cfg.trials; ++t) {
            CGPosLabel lp = random_pos_label(rng, 15);
            guarded(cp, label_str(lp), [&] {
                std::vector<Real> v;
                for (CGMethod m : all_methods) v.push_back(cg_pos(lp, m, ctx));
                cp.add(spread(v), label_str(lp));
            });
            CGMixedLabel lm = random_mixed_label(rng, 15);
            guarded(cm, label_str(lm), [&] {
                std::vector<Real> v;
                for (CGMethod m : all_methods) v.push_back(cg_mixed(lm, m, ctx));
                cm.add(spread(v), label_str(lm));
            });
        }
        out.push_back(cp.done());
        out.push_back(cm.done());
    }
    {
        Check sp(S, "special_values_pos", tolerance_for(ctx, 12));
        Check sm(S, "special_values_mixed", tolerance_for(ctx, 12));
        for (int t1 = 0; t1 <= 4; ++t1)
            for (int t2 = 0; t2 <= 4; ++t2)
                for (int tmu = t1 + t2 + 4; tmu <= t1 + t2 + 12; tmu += 2)
                    for (const auto& l : enumerate_couplings_pos(H(t1), H(t2), H(tmu)))
                        for (SpecialPos w : {SpecialPos::mu2_min, SpecialPos::mu1_min, SpecialPos::mu_min, SpecialPos::kappa_min})
                            if (special_applies(w, l))
                                guarded(sp, label_str(l), [&] {
                                    sp.add(rel_diff(special_value_pos(w, l, ctx), cg_pos(l, CGMethod::sum_fwd, ctx)),
                                           special_name(w) + " " + label_str(l));
                                });
        for (int tk = 0; tk <= 6; ++tk)
            for (int tj = 0; tj <= 6; ++tj)
                for (int tm = -tj; tm <= tj; tm += 2)
                    for (int tmu = tk + 2; tmu <= tk + 8; tmu += 2)
                        for (const auto& l : enumerate_couplings_mixed(H(tk), H(tmu), H(tj), H(tm)))
                            for (SpecialMixed w : {SpecialMixed::m_max, SpecialMixed::m_min, SpecialMixed::mu_min,
                                                   SpecialMixed::mu_p_min, SpecialMixed::kp_max, SpecialMixed::kp_min_kj,
                                                   SpecialMixed::kp_min_jk})
                                if (special_applies(w, l))
                                    guarded(sm, label_str(l), [&] {
                                        sm.add(rel_diff(special_value_mixed(w, l, ctx), cg_mixed(l, CGMethod::sum_fwd, ctx)),
                                               special_name(w) + " " + label_str(l));
                                    });
        out.push_back(sp.done());
        out.push_back(sm.done());
    }
    {
        Check c(S, "normalization", tolerance_for(ctx, 10));
        for (int t1 = 0; t1 <= 10; ++t1)
            for (int t2 = 0; t2 <= 10; ++t2) {
                CGPosLabel l{H(t1), H(t1 + 2), H(t2), H(t2 + 2), H(t1 + t2 + 2), H(t1 + t2 + 4)};
                for (CGMethod m : all_methods) guarded(c, label_str(l), [&] { c.add(abs(cg_pos(l, m, ctx) - 1), label_str(l)); });
            }
        for (int tk = 0; tk <= 10; ++tk)
            for (int tj = 0; tj <= tk; ++tj) {
                CGMixedLabel l{H(tk), H(tk + 2), H(tj), H(-tj), H(tk - tj), H(tk - tj + 2)};
                for (CGMethod m : all_methods) guarded(c, label_str(l), [&] { c.add(abs(cg_mixed(l, m, ctx) - 1), label_str(l)); });
            }
        out.push_back(c.done());
    }
    {
        // smooth limit: values at 1-1e-6 and 1-1e-5 differ by O(1e-5)
        Check c(S, "q_to_1_limit", Real(1e-3));
        QContext a("0.999999", ctx.digits()), b("0.99999", ctx.digits());
        for (int t = 0; t < std::min(cfg.trials, 20); ++t) {
            CGPosLabel l = random_pos_label(rng, 9);
            guarded(c, label_str(l), [&] { c.add(abs(cg_pos(l, CGMethod::sum_fwd, a) - cg_pos(l, CGMethod::sum_fwd, b)), label_str(l)); });
        }
        out.push_back(c.done());
    }
}

// ------------------------------------------------------------- orthogonality

void orthogonality(const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    const QContext& ctx = cfg.ctx;
    const std::string S = "orthogonality";
    const int max_mu_twice = std::min(cfg.max_mu.twice(), 20);
    Check first(S, "first_kind_selection_rule_range", tolerance_for(ctx, 15));
    Check printed(S, "first_kind_printed_range", tolerance_for(ctx, 15));
    Check second(S, "second_kind", tolerance_for(ctx, 15));
    for (int t1 = 0; t1 + 4 <= max_mu_twice; ++t1)
        for (int t2 = 0; t1 + t2 + 4 <= max_mu_twice; ++t2)
            for (int tmu = t1 + t2 + 4; tmu <= max_mu_twice; tmu += 2) {
                const HalfInt k1 = H(t1), k2 = H(t2), mu = H(tmu);
                std::map<std::pair<int, int>, Real> val;  // (kappa, mu1) twice -> coefficient
                std::vector<int> kappas, mu1s;
                for (const auto& l : enumerate_couplings_pos(k1, k2, mu)) {
                    val[{l.kappa.twice(), l.mu1.twice()}] = cg_pos(l, CGMethod::sum_fwd, ctx);
                    if (std::find(kappas.begin(), kappas.end(), l.kappa.twice()) == kappas.end()) kappas.push_back(l.kappa.twice());
                    if (std::find(mu1s.begin(), mu1s.end(), l.mu1.twice()) == mu1s.end()) mu1s.push_back(l.mu1.twice());
                }
                auto C = [&](int k, int m1) {
                    auto it = val.find({k, m1});
                    return it == val.end() ? Real(0) : it->second;
                };
                const int printed_top = printed_mu1_upper(k1, k2, mu).twice();
                const std::string where = "k1=" + k1.str() + " k2=" + k2.str() + " mu=" + mu.str();
                for (int ka : kappas)
                    for (int kb : kappas) {
                        Real s(0), sp(0);
                        for (int m1 : mu1s) {
                            Real t = C(ka, m1) * C(kb, m1);
                            s += t;
                            if (m1 <= printed_top) sp += t;
                        }
                        const Real delta = ka == kb ? 1 : 0;
                        first.add(abs(s - delta), where);
                        printed.add(abs(sp - delta), where);
                    }
                for (int ma : mu1s)
                    for (int mb : mu1s) {
                        Real s(0);
                        for (int k : kappas) s += C(k, ma) * C(k, mb);
                        second.add(abs(s - (ma == mb ? 1 : 0)), where);
                    }
            }
    out.push_back(first.done(false, "mu1 runs over kappa1+1 .. mu-kappa2-1"));
    CheckResult p = printed.done(true, "mu1 truncated at the printed upper limit mu-kappa1-kappa2-1");
    p.note = (p.pass ? "printed limit also holds" : "printed limit mu-kappa1-kappa2-1 fails whenever kappa1 > 0 (max deviation " +
                                                       sci(p.max_residual) + "); mu-kappa2-1 holds");
    out.push_back(p);
    out.push_back(second.done(false, "sum over kappa with (mu1', mu2') = (mu - mu2', mu2')"));
}

// ------------------------------------------------------------------ symmetry

void symmetry(const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    std::mt19937_64 rng(cfg.seed);
    Check c("symmetry", "q_inverse_swap", tolerance_for(cfg.ctx, 12));
    for (int t = 0; t < cfg.trials; ++t) {
        CGPosLabel l = random_pos_label(rng, 15);
        guarded(c, label_str(l), [&] {
            auto r = symmetry_check_pos(l, cfg.ctx);
            c.add(rel_diff(r.lhs, r.rhs), label_str(l));
        });
    }
    out.push_back(c.done());
}

// --------------------------------------------------------------- recurrences

void recurrences(const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<CGMixedLabel> labels;
    for (int t = 0; t < cfg.trials; ++t) labels.push_back(random_interior_mixed_label(rng, 15));
    for (Recurrence r : {Recurrence::c1, Recurrence::c2, Recurrence::c3}) {
        Check c("recurrences", recurrence_name(r), tolerance_for(cfg.ctx, 15));
        std::size_t bad = 0;
        for (const auto& l : labels)
            guarded(c, label_str(l), [&] {
                auto res = recurrence_residual(r, l, cfg.ctx);
                if (res.residual > tolerance_for(cfg.ctx, 15)) ++bad;
                c.add(res.residual, label_str(l));
            });
        out.push_back(c.done(false, std::to_string(bad) + "/" + std::to_string(labels.size()) +
                                        " interior labels exceed tolerance; coefficients as printed"));
    }
}

// -------------------------------------------------------------------- oracle

TensorState random_state(std::mt19937_64& rng, Kind kind, HalfInt k1, HalfInt second, HalfInt w_lo, HalfInt w_hi,
                         HalfInt cut) {
    TensorState s(kind, k1, second, cut);
    for (HalfInt w = w_lo; w <= w_hi; w += 1)
        for (const auto& key : weight_basis(kind, k1, second, w)) {
            Real v = Real(static_cast<long long>(rng() % 2000001) - 1000000) / 1000000;
            s.add(key, v, abs(v));
        }
    return s;
}

TensorState apply_power(Sign sg, TensorState s, int r, const QArith& A) {
    for (int i = 0; i < r; ++i) s = apply_coupled(sg, s, A);
    return s;
}

// Applies f(total weight) to every component.
TensorState diagonal(const TensorState& s, const std::function<Real(const Rat&)>& f) {
    TensorState o = s.zero_like();
    for (const auto& [key, v] : s.entries()) {
        Real c = f(Rat(key.first + key.second, 2));
        o.add(key, c * v.value, abs(c * v.value));
    }
    return o;
}

// ref2: squared size of the terms that produced a and b, for differences that should cancel to zero
Real state_distance(const TensorState& a, const TensorState& b, const Real& ref2 = Real(0)) {
    TensorState d = a;
    d.accumulate(b, Real(-1));
    Real den = std::max({a.norm2(), b.norm2(), ref2});
    return den == 0 ? Real(sqrt(d.norm2())) : Real(sqrt(d.norm2() / den));
}

// Invariant bilinear form: Euclidean on pos x pos, (-1)^{j-m} on the finite factor of mixed products.
Real dot(const TensorState& a, const TensorState& b) {
    Real s(0);
    for (const auto& [key, v] : a.entries()) {
        Sum c = b.component(key);
        const bool odd = a.kind() == Kind::mixed && ((a.second().twice() - key.second) / 2) % 2 != 0;
        s += odd ? Real(-v.value * c.value) : Real(v.value * c.value);
    }
    return s;
}

void oracle(const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    const QContext& ctx = cfg.ctx;
    const std::string S = "oracle";
    const int mt = cfg.max_mu.twice();
    Check pp(S, "pos_vs_projection", tolerance_for(ctx, 15));
    Check pk(S, "pos_vs_kernel", tolerance_for(ctx, 15));
    Check mp(S, "mixed_vs_projection", tolerance_for(ctx, 15));
    Check mk(S, "mixed_vs_kernel", tolerance_for(ctx, 15));
    for (int t1 = 0; t1 + 4 <= mt; ++t1)
        for (int t2 = 0; t1 + t2 + 4 <= mt; ++t2)
            for (int tk = t1 + t2 + 2; tk + 2 <= mt; tk += 2) {
                const HalfInt k1 = H(t1), k2 = H(t2), k = H(tk);
                const HalfInt top = H(tk + 2 * ((mt - tk) / 2));
                for (OracleMethod om : {OracleMethod::projection, OracleMethod::kernel}) {
                    Check& c = om == OracleMethod::projection ? pp : pk;
                    const std::string where = "k1=" + k1.str() + " k2=" + k2.str() + " kappa=" + k.str();
                    guarded(c, where, [&] {
                        CoupledColumn col = coupled_column(om, Kind::pos_pos, k1, k2, k, top, ctx);
                        for (HalfInt mu = k + 1; mu <= top; mu += 1)
                            for (const auto& l : enumerate_couplings_pos(k1, k2, mu)) {
                                if (l.kappa != k) continue;
                                c.add(rel_diff(col.at(l.mu1, l.mu2), cg_pos(l, CGMethod::sum_fwd, ctx)), label_str(l));
                            }
                    });
                }
            }
    // mixed: every component label, j included, is at most max_mu
    for (int tk = 0; tk + 2 <= mt; ++tk)
        for (int tj = 0; tj <= mt; ++tj)
            for (HalfInt kp : coupled_kappas_mixed(H(tk), H(tj))) {
                if (kp.twice() + 2 > mt) continue;
                const HalfInt k = H(tk), j = H(tj);
                const HalfInt top = kp + ((H(mt) - kp).twice() / 2);
                for (OracleMethod om : {OracleMethod::projection, OracleMethod::kernel}) {
                    Check& c = om == OracleMethod::projection ? mp : mk;
                    const std::string where = "kappa=" + k.str() + " j=" + j.str() + " kappa'=" + kp.str();
                    guarded(c, where, [&] {
                        CoupledColumn col = coupled_column(om, Kind::mixed, k, j, kp, top, ctx);
                        for (HalfInt mup = kp + 1; mup <= top; mup += 1)
                            for (HalfInt m = -j; m <= j; m += 1) {
                                CGMixedLabel l{k, mup - m, j, m, kp, mup};
                                if (!l.well_formed() || !l.admissible() || l.mu.twice() > mt) continue;
                                c.add(rel_diff(col.at(l.mu, l.m), cg_mixed(l, CGMethod::sum_fwd, ctx)), label_str(l));
                            }
                    });
                }
            }
    for (Check* c : {&pp, &pk, &mp, &mk}) out.push_back(c->done(false, "all admissible labels with every component <= " + cfg.max_mu.str() + ", relative error"));

    {
        // kernel of the coupled lowering operator on weight kappa'+1
        Check c(S, "mixed_kernel_range", Real(0));
        std::vector<std::string> extra;
        for (int tk = 0; tk <= 6; ++tk)
            for (int tj = 0; tj <= 6; ++tj)
                for (int tkp = (tk + tj) % 2; tkp <= tk + tj + 2; tkp += 2) {
                    const HalfInt k = H(tk), j = H(tj), kp = H(tkp);
                    const bool in_range = kp >= (k >= j ? k - j : j - k) && kp <= k + j;
                    int dim = lowering_kernel_dimension(Kind::mixed, k, j, kp, ctx);
                    const bool ok = in_range ? dim == 1 : dim == 0;
                    c.add(ok ? Real(0) : Real(1), "kappa=" + k.str() + " j=" + j.str() + " kappa'=" + kp.str());
                    if (!ok && extra.size() < 3)
                        extra.push_back("dim " + std::to_string(dim) + " at kappa=" + k.str() + ", j=" + j.str() +
                                        ", kappa'=" + kp.str());
                }
        CheckResult r = c.done(true);
        std::string note = r.pass ? "kernel is one-dimensional exactly on max(kappa-j, j-kappa) <= kappa' <= kappa+j"
                                  : "kernel dimension departs from the stated range, e.g. ";
        for (std::size_t i = 0; i < extra.size(); ++i) note += (i ? "; " : "") + extra[i];
        r.note = note;
        out.push_back(r);
    }

    // operator identities on truncated spaces
    std::mt19937_64 rng(cfg.seed);
    const int work = ctx.digits() + 20;
    PrecisionScope scope(work);
    const QArith& A = arith(ctx.q(), work);
    Check comm(S, "commutator_K+_K-", tolerance_for(ctx, 15));
    Check lem2(S, "bracket_shift_through_powers", tolerance_for(ctx, 15));
    Check lem5(S, "commutator_with_powers", tolerance_for(ctx, 15));
    Check idem(S, "projector_idempotent", tolerance_for(ctx, 15));
    Check kill(S, "lowering_kills_projection", tolerance_for(ctx, 15));
    Check comp(S, "projector_composition", tolerance_for(ctx, 15));
    Check adj(S, "projector_adjoint", tolerance_for(ctx, 15));
    const int trials = std::max(1, std::min(cfg.trials, 20));
    for (int t = 0; t < trials; ++t) {
        const Kind kind = t % 2 ? Kind::mixed : Kind::pos_pos;
        const HalfInt k1 = H(uniform(rng, 0, 4)), second = H(uniform(rng, 0, 4));
        const HalfInt base = kind == Kind::pos_pos ? k1 + second + 2 : k1 + 1 - second;
        const HalfInt lo = base + uniform(rng, 0, 2), hi = lo + uniform(rng, 0, 3);
        const HalfInt cut = hi + 8;
        const std::string where = std::string(kind == Kind::mixed ? "mixed" : "pos") + " k1=" + k1.str() + " second=" + second.str();
        guarded(comm, where, [&] {
            TensorState v = random_state(rng, kind, k1, second, lo, hi, cut);
            TensorState a = apply_coupled(Sign::plus, apply_coupled(Sign::minus, v, A), A);
            const Real ref2 = std::max(a.norm2(), v.norm2());
            a.accumulate(apply_coupled(Sign::minus, apply_coupled(Sign::plus, v, A), A), Real(-1));
            TensorState b = diagonal(v, [&](const Rat& w) { return Real(-A.num(2 * w)); });
            comm.add(state_distance(a, b, ref2), where);

            const Rat nu(uniform(rng, -4, 4), 2), eta(uniform(rng, -6, 6), 3);
            for (int r = 1; r <= 4; ++r) {
                for (Sign sg : {Sign::plus, Sign::minus}) {
                    const int s = sgn(sg);
                    TensorState l = diagonal(apply_power(sg, v, r, A), [&](const Rat& w) { return A.num(nu * w + eta); });
                    TensorState rr = apply_power(sg, diagonal(v, [&](const Rat& w) { return A.num(nu * w + eta + s * nu * r); }), r, A);
                    lem2.add(state_distance(l, rr), where);
                    // [A+-, A-+^r] = -+ A-+^{r-1} [r] [2B -+ (r-1)]
                    const Sign other = sg == Sign::plus ? Sign::minus : Sign::plus;
                    TensorState c1 = apply_coupled(sg, apply_power(other, v, r, A), A);
                    TensorState c1b = apply_power(other, apply_coupled(sg, v, A), r, A);
                    const Real ref2 = std::max({c1.norm2(), c1b.norm2(), v.norm2()});
                    c1.accumulate(c1b, Real(-1));
                    TensorState c2 = apply_power(other, diagonal(v, [&](const Rat& w) {
                                                     return Real(-s * A.num(r) * A.num(2 * w - s * (r - 1)));
                                                 }), r - 1, A);
                    lem5.add(state_distance(c1, c2, ref2), where);
                }
            }
        });
        const HalfInt kt = kind == Kind::pos_pos ? k1 + second + 1 + uniform(rng, 0, 3)
                                                 : coupled_kappas_mixed(k1, second)[uniform(rng, 0, static_cast<int>(coupled_kappas_mixed(k1, second).size()) - 1)];
        guarded(idem, where, [&] {
            TensorState v = random_state(rng, kind, k1, second, kt + 1, kt + 1, kt + 12);
            TensorState p = project_minimal(kt, v, A);
            idem.add(state_distance(project_minimal(kt, p, A), p), where);
            TensorState lowered = apply_coupled(Sign::minus, p, A);
            kill.add(Real(sqrt(lowered.norm2() / std::max(p.norm2(), Real(1)))), where);
        });
        guarded(comp, where, [&] {
            const HalfInt m1 = kt + 1 + uniform(rng, 0, 2), m2 = kt + 1 + uniform(rng, 0, 2), m3 = kt + 1 + uniform(rng, 0, 2);
            const HalfInt c = std::max({m1, m2, m3}) + 4;
            TensorState v = random_state(rng, kind, k1, second, m3, m3, c);
            TensorState two = project_general({kt, m1, m2}, project_general({kt, m2, m3}, v, A), A);
            TensorState one = project_general({kt, m1, m3}, v, A);
            comp.add(state_distance(two, one), where);
            TensorState u = random_state(rng, kind, k1, second, m1, m1, c);
            Real lhs = dot(u, project_general({kt, m1, m3}, v, A));
            Real rhs = dot(project_general({kt, m3, m1}, u, A), v);
            adj.add(abs(lhs - rhs) / std::max({Real(abs(lhs)), Real(abs(rhs)), Real(1)}), where);
        });
    }
    for (Check* c : {&comm, &lem2, &lem5, &idem, &kill, &comp, &adj}) out.push_back(c->done());
}

// --------------------------------------------------------------------- qhahn

struct HahnCase {
    int N;
    Rat alpha, beta;
};

void qhahn_suite(const VerifyConfig& cfg, std::vector<CheckResult>& out) {
    const QContext& ctx = cfg.ctx;
    const std::string S = "qhahn";
    const Identity ids[] = {Identity::diffeq, Identity::ttrr, Identity::lowering, Identity::raising};

    std::vector<HahnCase> hahn_cases;
    for (int N : {1, 2, 3, 5, 8, 12}) {
        hahn_cases.push_back({N, 0, 0});
        hahn_cases.push_back({N, 2, 1});
        hahn_cases.push_back({N, Rat(1, 2), Rat(5, 2)});
    }
    // parameters of the mixed-case connection: alpha = kappa-j+mu', beta = kappa-j-mu' <= -1
    for (int tk = 2; tk <= 8; tk += 3)
        for (int tj = 0; tj <= tk; tj += 2) {
            const Rat k(tk, 2), j(tj, 2);
            for (int d = 1; d <= 3; ++d) {
                const Rat mup = k - j + d;
                hahn_cases.push_back({to_int(2 * j + 1), k - j + mup, k - j - mup});
            }
        }
    std::vector<DualHahnSpec> dual_cases;
    for (int N : {1, 2, 4, 7, 12})
        for (Rat a : {Rat(0), Rat(1, 2), Rat(2)})
            for (Rat c : {Rat(0), a, -a / 2}) dual_cases.push_back({0, a, a + N, c});
    // mixed-case dual: a = kappa-j, b = kappa+j+1, c = -mu'
    for (int tk = 2; tk <= 8; tk += 3)
        for (int tj = 0; tj <= tk; tj += 2) {
            const Rat k(tk, 2), j(tj, 2);
            dual_cases.push_back({0, k - j, k + j + 1, -(k + j + 2)});
        }

    for (Identity id : ids) {
        Check h(S, "hahn_" + identity_name(id), tolerance_for(ctx, 12));
        for (const auto& hc : hahn_cases)
            for (int n = 0; n <= std::min(6, hc.N - 1); ++n)
                for (int s = 0; s < hc.N; ++s) {
                    HahnSpec sp{n, hc.N, hc.alpha, hc.beta};
                    try {
                        h.add(residual(id, sp, s, ctx), "n=" + std::to_string(n) + " N=" + std::to_string(hc.N) +
                                                            " alpha=" + rat_str(hc.alpha) + " beta=" + rat_str(hc.beta) +
                                                            " s=" + std::to_string(s));
                    } catch (const DomainError&) {
                        h.skip();
                    }
                }
        out.push_back(h.done(false, "n <= 6, N <= 12, includes beta <= -1"));
        Check d(S, "dual_" + identity_name(id), tolerance_for(ctx, 12));
        for (const auto& dc : dual_cases)
            for (int n = 0; n <= std::min(6, dc.N() - 1); ++n)
                for (Rat s = dc.a; s < dc.b; s += 1) {
                    DualHahnSpec sp = dc;
                    sp.n = n;
                    try {
                        d.add(residual(id, sp, s, ctx), "n=" + std::to_string(n) + " a=" + rat_str(dc.a) + " b=" +
                                                            rat_str(dc.b) + " c=" + rat_str(dc.c) + " s=" + rat_str(s));
                    } catch (const DomainError&) {
                        d.skip();
                    }
                }
        out.push_back(d.done(false, "n <= 6, N <= 12, includes |c| >= a+1"));
    }

    {
        Check h(S, "hahn_orthogonality", tolerance_for(ctx, 12));
        for (int N : {1, 3, 6, 12})
            for (auto [al, be] : {std::pair<Rat, Rat>{0, 0}, {2, 1}, {Rat(1, 2), Rat(-1, 2)}}) {
                HahnSpec probe{0, N, al, be};
                for (int n = 0; n <= std::min(6, N - 1); ++n) {
                    HahnSpec sp{n, N, al, be};
                    bool integral = is_integer(al) && is_integer(be);
                    if (!integral) {
                        h.skip();
                        continue;
                    }
                    const Real d2 = hahn_norm2(sp, ctx);
                    for (int m = 0; m <= std::min(6, N - 1); ++m)
                        h.add(abs(hahn_inner(sp, m, ctx) - (n == m ? d2 : Real(0))) / d2,
                              "n=" + std::to_string(n) + " m=" + std::to_string(m) + " N=" + std::to_string(N));
                }
                (void)probe;
            }
        out.push_back(h.done(false, "relative to d_n^2; integer alpha, beta (factorial weights)"));
        Check d(S, "dual_orthogonality", tolerance_for(ctx, 12));
        for (const auto& dc : dual_cases) {
            if (!dc.orthogonal() || !is_integer(dc.a - dc.c) || !is_integer(dc.a + dc.c)) continue;
            for (int n = 0; n <= std::min(6, dc.N() - 1); ++n) {
                DualHahnSpec sp = dc;
                sp.n = n;
                const Real d2 = dual_norm2(sp, ctx);
                for (int m = 0; m <= std::min(6, dc.N() - 1); ++m)
                    d.add(abs(dual_inner(sp, m, ctx) - (n == m ? d2 : Real(0))) / d2,
                          "n=" + std::to_string(n) + " m=" + std::to_string(m) + " a=" + rat_str(dc.a) + " c=" + rat_str(dc.c));
            }
        }
        out.push_back(d.done(false, "relative to d_n^2"));
    }

    {
        std::mt19937_64 rng(cfg.seed);
        for (Connection cn : {Connection::pos_hahn, Connection::pos_dual, Connection::mixed_hahn, Connection::mixed_dual}) {
            Check c(S, "connection_" + connection_name(cn), tolerance_for(ctx, 12));
            for (int t = 0; t < cfg.trials; ++t) {
                if (cn == Connection::pos_hahn || cn == Connection::pos_dual) {
                    CGPosLabel l = random_pos_label(rng, 15);
                    guarded(c, label_str(l), [&] { c.add(rel_diff(cg_from_polynomials(cn, l, ctx), cg_pos(l, CGMethod::sum_fwd, ctx)), label_str(l)); });
                } else {
                    CGMixedLabel l = random_mixed_label(rng, 15);
                    guarded(c, label_str(l), [&] { c.add(rel_diff(cg_from_polynomials(cn, l, ctx), cg_mixed(l, CGMethod::sum_fwd, ctx)), label_str(l)); });
                }
            }
            out.push_back(c.done());
        }
        for (Connection cn : {Connection::mixed_hahn, Connection::mixed_dual}) {
            Check c(S, "connection_" + connection_name(cn) + "_as_printed", tolerance_for(ctx, 12));
            for (int t = 0; t < cfg.trials; ++t) {
                CGMixedLabel l = random_mixed_label(rng, 15);
                guarded(c, label_str(l), [&] {
                    c.add(rel_diff(cg_from_polynomials_as_printed(cn, l, ctx), cg_mixed(l, CGMethod::sum_fwd, ctx)), label_str(l));
                });
            }
            CheckResult r = c.done(true);
            r.note = r.pass ? "printed substitution reproduces the coefficients"
                            : "printed substitution and prefactor do not reproduce the coefficients (max relative deviation " +
                                  sci(r.max_residual) + ")";
            out.push_back(r);
        }
    }

    {
        // tabulated entries against values that satisfy the identities
        const char* names[] = {"sigma", "phi", "lambda_n", "A", "B", "C", "alpha_n", "beta_n", "gamma_n", "B_n", "tau_n"};
        Real worst_h[11], worst_d[11];
        for (int i = 0; i < 11; ++i) worst_h[i] = worst_d[i] = 0;
        for (int N : {3, 5, 8})
            for (int n = 1; n < N; ++n)
                for (int s = 1; s < N; ++s) {
                    HahnSpec sp{n, N, 2, 1};
                    DualHahnSpec dp{n, Rat(1), Rat(1 + N), Rat(1, 2)};
                    try {
                        Table1 a = table1_data(sp, s, ctx), b = table1_printed(sp, s, ctx);
                        const Real* pa = &a.sigma;
                        const Real* pb = &b.sigma;
                        for (int i = 0; i < 11; ++i) worst_h[i] = std::max(worst_h[i], rel_diff(pa[i], pb[i]));
                    } catch (const DomainError&) {
                    }
                    try {
                        Table1 a = table1_data(dp, Rat(1 + s), ctx), b = table1_printed(dp, Rat(1 + s), ctx);
                        const Real* pa = &a.sigma;
                        const Real* pb = &b.sigma;
                        for (int i = 0; i < 11; ++i) worst_d[i] = std::max(worst_d[i], rel_diff(pa[i], pb[i]));
                    } catch (const DomainError&) {
                    }
                }
        for (int fam = 0; fam < 2; ++fam) {
            Check c(S, std::string(fam ? "dual" : "hahn") + "_table_as_printed", tolerance_for(ctx, 12));
            std::string bad;
            for (int i = 0; i < 11; ++i) {
                const Real& w = fam ? worst_d[i] : worst_h[i];
                c.add(w, names[i]);
                if (w > tolerance_for(ctx, 12)) bad += (bad.empty() ? "" : ", ") + std::string(names[i]);
            }
            CheckResult r = c.done(true);
            r.note = bad.empty() ? "all tabulated entries agree" : "tabulated entries that disagree (n >= 1): " + bad;
            out.push_back(r);
        }
    }
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const VerifyConfig& cfg) {
    PrecisionScope scope(cfg.ctx.digits() + 20);
    std::vector<CheckResult> out;
    auto want = [&](Suite s) { return suite == s || suite == Suite::all; };
    if (want(Suite::identities)) identities(cfg, out);
    if (want(Suite::orthogonality)) orthogonality(cfg, out);
    if (want(Suite::symmetry)) symmetry(cfg, out);
    if (want(Suite::recurrences)) recurrences(cfg, out);
    if (want(Suite::oracle)) oracle(cfg, out);
    if (want(Suite::qhahn)) qhahn_suite(cfg, out);
    return out;
}

}  // namespace suq
