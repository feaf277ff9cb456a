// Labels, selection rules, symmetry, recurrences and coupling enumeration.
#include "detail.hpp"

#include <algorithm>
#include <cctype>

namespace suq {

bool CGPosLabel::well_formed() const {
    return kappa.twice() >= 0 && PosSeriesLabel{kappa1, mu1}.valid() && PosSeriesLabel{kappa2, mu2}.valid();
}

bool CGPosLabel::admissible() const {
    return well_formed() && mu == mu1 + mu2 && kappa >= kappa1 + kappa2 + 1 &&
           (kappa - kappa1 - kappa2).is_integer() && mu >= kappa + 1;
}

void CGPosLabel::validate() const {
    PosSeriesLabel{kappa1, mu1}.validate();
    PosSeriesLabel{kappa2, mu2}.validate();
    if (kappa.twice() < 0) throw DomainError("kappa must be >= 0");
}

std::vector<int> CGPosLabel::twice() const {
    return {kappa1.twice(), mu1.twice(), kappa2.twice(), mu2.twice(), kappa.twice(), mu.twice()};
}

bool CGMixedLabel::well_formed() const {
    return PosSeriesLabel{kappa, mu}.valid() && FiniteRepLabel{j, m}.valid() && kappa_p.twice() >= 0;
}

bool CGMixedLabel::admissible() const {
    HalfInt lo = kappa >= j ? kappa - j : j - kappa;
    return well_formed() && mu_p == mu + m && kappa_p >= lo && kappa_p <= kappa + j &&
           (kappa + j - kappa_p).is_integer() && mu_p >= kappa_p + 1;
}

void CGMixedLabel::validate() const {
    PosSeriesLabel{kappa, mu}.validate();
    FiniteRepLabel{j, m}.validate();
    if (kappa_p.twice() < 0) throw DomainError("kappa' must be >= 0");
}

std::vector<int> CGMixedLabel::twice() const {
    return {kappa.twice(), mu.twice(), j.twice(), m.twice(), kappa_p.twice(), mu_p.twice()};
}

std::string method_name(CGMethod m) {
    switch (m) {
        case CGMethod::sum_fwd: return "SUM_FWD";
        case CGMethod::sum_rev: return "SUM_REV";
        case CGMethod::hyp_a: return "HYP_A";
        case CGMethod::hyp_b: return "HYP_B";
        case CGMethod::hyp_c: return "HYP_C";
    }
    return "?";
}

CGMethod parse_method(const std::string& name) {
    std::string up = name;
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    for (CGMethod m : all_methods)
        if (method_name(m) == up) return m;
    throw DomainError("unknown method '" + name + "'");
}

SymmetryResult symmetry_check_pos(const CGPosLabel& label, const QContext& ctx) {
    label.validate();
    Real lhs = cg_pos(label, CGMethod::sum_fwd, ctx);
    CGPosLabel swapped{label.kappa2, label.mu2, label.kappa1, label.mu1, label.kappa, label.mu};
    Real rhs = cg_pos(swapped, CGMethod::sum_fwd, ctx.inverse());
    if (label.admissible() && (label.kappa - label.kappa1 - label.kappa2 - 1).to_int() % 2) rhs = -rhs;
    return {lhs, rhs};
}

std::string recurrence_name(Recurrence r) {
    switch (r) {
        case Recurrence::c1: return "c1";
        case Recurrence::c2: return "c2";
        case Recurrence::c3: return "c3";
    }
    return "?";
}

namespace {

CGMixedLabel shifted(const CGMixedLabel& l, int dm, int dkp, int dmup) {
    return CGMixedLabel{l.kappa, l.mu, l.j, l.m + HalfInt(dm), l.kappa_p + HalfInt(dkp), l.mu_p + HalfInt(dmup)};
}

}  // namespace

// The three relations are transcribed as printed; see the README for their status.
RecurrenceResult recurrence_residual(Recurrence which, const CGMixedLabel& label, const QContext& ctx) {
    label.validate();
    auto C = [&](const CGMixedLabel& l) { return cg_mixed_or_zero(l, ctx); };
    const int work = ctx.digits() + 20;
    Real c0 = C(label);
    Real c_a, c_b;
    CGMixedLabel la, lb;
    switch (which) {
        case Recurrence::c1: la = shifted(label, 1, 0, 1); lb = shifted(label, -1, 0, -1); break;
        case Recurrence::c2: la = shifted(label, 0, -1, 0); lb = shifted(label, 1, 0, 1); break;
        case Recurrence::c3:
            la = shifted(label, 0, 1, 0);
            // the printed relation ends with <kappa mu, j m | kappa'-1 mu>
            lb = CGMixedLabel{label.kappa, label.mu, label.j, label.m, label.kappa_p - 1, label.mu};
            break;
    }
    c_a = C(la);
    c_b = C(lb);
    PrecisionScope scope(work);
    const QArith& A = arith(ctx.q(), work);
    detail::MixR L(label);
    const Rat k = L.k, mu = L.mu, j = L.j, m = L.m, kp = L.kp, mup = L.mup;
    auto n = [&](const Rat& x) { return A.num(x); };
    auto p = [&](const Rat& e) { return A.pow(e); };
    auto root = [](const Real& x) { return Real(sqrt(x)); };
    Real lhs, r1, r2;
    switch (which) {
        case Recurrence::c1: {
            Real c = n(kp - k + j) * n(kp + k - j + 1) * p(-(3 * j + kp + 2 * m + 3)) -
                     n(j - m) * n(k + m + kp + 1) * p(-k + 1) + n(j + m) * n(k - kp - m + 1) * p(k + 1);
            lhs = c * root(n(mup - kp) * n(mup + kp)) * c0;
            r1 = n(k + m + kp + 1) * root(n(mup + kp + 1) * n(j + m + 1) * n(mup + kp)) * p(2 * (j - k)) * c_a;
            r2 = n(k - kp - m + 1) * root(n(mup - kp - 1) * n(j - m + 1) * n(mup - kp)) * p(2 * (k + 1)) * c_b;
            break;
        }
        case Recurrence::c2: {
            const Rat h = (j + m) / 2;
            Real c = n(kp - k + j) * n(kp + k + j + 1) * n(kp + mup) * p(kp - mup - 2 * j + 1) +
                     n(2 * kp) *
                         (n(k + j + h + 1) * n(k + mu) * p(-2 * j - 1 - mup + (j + mu) / 2) +
                          n(mu - h) * n(k + j + 1 - h) * p(-(k + mu)) - n(kp + h) * n(kp + h + 1) * p(2 * (j + m))) *
                         p(j + m + 1);
            lhs = c * root(n(2 * kp - 1) * n(mup - kp - 1)) * c0;
            r1 = root(n(k - j + kp) * n(k + j - kp + 1) * n(mup - kp) * n(mup - kp - 1) * n(kp - k + j) *
                      n(kp + k + j + 1) * n(kp + mup)) *
                 p(mup - 2 * j - 1) * c_a;
            r2 = -n(2 * kp) * root(n(j + m + 1) * n(j - m) * n(kp + mup + 1) * n(2 * kp - 1) * n(mup - kp - 1)) *
                 p(-2 * j - 2 * m - mu) * c_b;
            break;
        }
        case Recurrence::c3: {
            Real c = n(j + m) * p(mup + j - m) + n(kp + k - j + 1) * n(k + j - kp) * n(mup - kp - 1) * p(-kp) -
                     n(kp - k + j) * n(kp + k + j + 1) * n(kp + mup) * p(kp - 2);
            lhs = c * root(n(2 * kp + 3) * n(2 * kp - 1)) * c0;
            r1 = root(n(2 * k + 1) * n(2 * kp - 1) * n(k + j + kp + 2) * n(j - k + kp + 1) * n(mup + kp + 1) *
                      n(kp + k - j + 1) * n(k + j - kp) * n(mup - kp - 1)) *
                 c_a;
            r2 = -root(n(2 * kp + 1) * n(2 * kp + 3) * n(kp - k + j) * n(kp + k + j + 1) * n(mup + kp) *
                       n(k - j + kp) * n(k + j - kp + 1) * n(mup - kp)) *
                 c_b;
            break;
        }
    }
    // a vanishing coefficient kills its term even where the bracket product under the root is negative
    if (c0 == 0) lhs = 0;
    if (c_a == 0) r1 = 0;
    if (c_b == 0) r2 = 0;
    RecurrenceResult res;
    res.lhs = lhs;
    res.rhs = r1 + r2;
    res.scale = std::max({Real(abs(lhs)), Real(abs(r1)), Real(abs(r2))});
    res.residual = res.scale == 0 ? Real(0) : Real(abs(res.lhs - res.rhs) / res.scale);
    return res;
}

std::vector<CGPosLabel> enumerate_couplings_pos(HalfInt k1, HalfInt k2, HalfInt mu) {
    std::vector<CGPosLabel> out;
    for (HalfInt k = k1 + k2 + 1; k <= mu - 1; k += 1) {
        for (HalfInt m1 = k1 + 1; m1 <= mu - k2 - 1; m1 += 1) {
            CGPosLabel l{k1, m1, k2, mu - m1, k, mu};
            if (l.admissible()) out.push_back(l);
        }
    }
    return out;
}

std::vector<HalfInt> coupled_kappas_mixed(HalfInt k, HalfInt j) {
    std::vector<HalfInt> out;
    for (HalfInt kp = k >= j ? k - j : j - k; kp <= k + j; kp += 1) out.push_back(kp);
    return out;
}

std::vector<CGMixedLabel> enumerate_couplings_mixed(HalfInt k, HalfInt mu, HalfInt j, HalfInt m) {
    std::vector<CGMixedLabel> out;
    for (HalfInt kp : coupled_kappas_mixed(k, j)) {
        CGMixedLabel l{k, mu, j, m, kp, mu + m};
        if (l.admissible()) out.push_back(l);
    }
    return out;
}

HalfInt printed_mu1_upper(HalfInt k1, HalfInt k2, HalfInt mu) { return mu - k1 - k2 - 1; }

}  // namespace suq
