// Closed forms at extreme label values.
#include "detail.hpp"

namespace suq {

using detail::MixR;
using detail::neg1pow;
using detail::PosR;

std::string special_name(SpecialPos w) {
    switch (w) {
        case SpecialPos::mu2_min: return "mu2_min";
        case SpecialPos::mu1_min: return "mu1_min";
        case SpecialPos::mu_min: return "mu_min";
        case SpecialPos::kappa_min: return "kappa_min";
    }
    return "?";
}

std::string special_name(SpecialMixed w) {
    switch (w) {
        case SpecialMixed::m_max: return "m_max";
        case SpecialMixed::m_min: return "m_min";
        case SpecialMixed::mu_min: return "mu_min";
        case SpecialMixed::mu_p_min: return "mu_p_min";
        case SpecialMixed::kp_max: return "kp_max";
        case SpecialMixed::kp_min_kj: return "kp_min_kj";
        case SpecialMixed::kp_min_jk: return "kp_min_jk";
    }
    return "?";
}

bool special_applies(SpecialPos which, const CGPosLabel& l) {
    switch (which) {
        case SpecialPos::mu2_min: return l.mu2 == l.kappa2 + 1;
        case SpecialPos::mu1_min: return l.mu1 == l.kappa1 + 1;
        case SpecialPos::mu_min: return l.mu == l.kappa + 1;
        case SpecialPos::kappa_min: return l.kappa == l.kappa1 + l.kappa2 + 1;
    }
    return false;
}

bool special_applies(SpecialMixed which, const CGMixedLabel& l) {
    switch (which) {
        case SpecialMixed::m_max: return l.m == l.j;
        case SpecialMixed::m_min: return l.m == -l.j;
        case SpecialMixed::mu_min: return l.mu == l.kappa + 1;
        case SpecialMixed::mu_p_min: return l.mu_p == l.kappa_p + 1;
        case SpecialMixed::kp_max: return l.kappa_p == l.kappa + l.j;
        case SpecialMixed::kp_min_kj: return l.kappa >= l.j && l.kappa_p == l.kappa - l.j;
        case SpecialMixed::kp_min_jk: return l.j >= l.kappa && l.kappa_p == l.j - l.kappa;
    }
    return false;
}

namespace {

Sum single(const Real& v) { return Sum{v, abs(v)}; }

Sum pos_value(const QArith& A, SpecialPos which, const PosR& L) {
    const Rat n = L.k - L.k1 - L.k2 - 1;
    switch (which) {
        case SpecialPos::mu2_min:
            return single(neg1pow(n) *
                          A.sqrt(A.num(2 * L.k + 1) * A.fact(L.k - L.k1 + L.k2) * A.fact(L.k + L.k1 + L.k2 + 1) /
                                 (A.fact(L.k + L.k1 - L.k2) * A.fact(n) * A.fact(2 * L.k2 + 1))) *
                          A.pow((L.k1 * (L.k1 + 1) + L.k2 * (L.k2 + 1) - L.k * (L.k + 1)) / 2) *
                          A.sqrt(A.fact(L.m1 + L.k1) * A.fact(L.m1 - L.k1 - 1) /
                                 (A.fact(L.mu + L.k) * A.fact(L.mu - L.k - 1))) *
                          A.pow(L.m1 * (L.k2 + 1)));
        case SpecialPos::mu1_min:
            return single(A.sqrt(A.num(2 * L.k + 1) * A.fact(L.k + L.k1 - L.k2) * A.fact(L.k + L.k1 + L.k2 + 1) /
                                 (A.fact(L.k - L.k1 + L.k2) * A.fact(n) * A.fact(2 * L.k1 + 1))) *
                          A.pow((L.k * (L.k + 1) - L.k1 * (L.k1 + 1) - L.k2 * (L.k2 + 1)) / 2) *
                          A.sqrt(A.fact(L.m2 + L.k2) * A.fact(L.m2 - L.k2 - 1) /
                                 (A.fact(L.mu + L.k) * A.fact(L.mu - L.k - 1))) *
                          A.pow(-L.m2 * (L.k1 + 1)));
        case SpecialPos::mu_min: {
            const Rat t = L.m1 - L.k1 - 1;
            const Rat e = -(L.k - L.k1 + L.k2) * n / 2 + (L.k - L.m1 - L.k1) * t + (L.m2 + L.k2) * (L.m2 - L.k2 - 1);
            return single(neg1pow(t) *
                          A.sqrt(A.fact(L.k - L.k1 + L.k2) * A.fact(L.k + L.k1 - L.k2) * A.fact(L.k + L.k1 + L.k2 + 1) *
                                 A.fact(n) /
                                 (A.fact(L.m1 + L.k1) * A.fact(L.m2 + L.k2) * A.fact(L.m2 - L.k2 - 1) *
                                  A.fact(L.m1 - L.k1 - 1) * A.fact(2 * L.k))) *
                          A.pow(e));
        }
        case SpecialPos::kappa_min:
            return single(A.sqrt(A.fact(2 * L.k1 + 2 * L.k2 + 3) / (A.fact(2 * L.k1 + 1) * A.fact(2 * L.k2 + 1))) *
                          A.sqrt(A.fact(L.mu - L.k1 - L.k2 - 2) * A.fact(L.m1 + L.k1) * A.fact(L.m2 + L.k2) /
                                 (A.fact(L.mu + L.k1 + L.k2 + 1) * A.fact(L.m1 - L.k1 - 1) *
                                  A.fact(L.m2 - L.k2 - 1))) *
                          A.pow(L.m1 * (L.k2 + 1) - L.m2 * (L.k1 + 1)));
    }
    throw std::logic_error("unknown special value");
}

Sum mixed_value(const QArith& A, SpecialMixed which, const MixR& L) {
    const Rat k = L.k, mu = L.mu, j = L.j, m = L.m, kp = L.kp, mup = L.mup;
    const Rat n = j - k + kp;
    switch (which) {
        case SpecialMixed::m_max:
            return single(A.sqrt(A.num(2 * kp + 1) * A.fact(k - j + kp) * A.fact(2 * j) * A.fact(mup - kp - 1) *
                                 A.fact(mup + kp) /
                                 (A.fact(k + j + kp + 1) * A.fact(k + j - kp) * A.fact(n) * A.fact(mu + k) *
                                  A.fact(mu - k - 1))) *
                          A.pow(mu * (kp + 1) - mup * (j + kp + 1) + (k + j + kp + 1) * n / 2));
        case SpecialMixed::m_min:
            return single(A.sqrt(A.num(2 * kp + 1) * A.fact(k + kp - j) * A.fact(2 * j) * A.fact(mu + k) *
                                 A.fact(mu - k - 1) /
                                 (A.fact(k + j + kp + 1) * A.fact(n) * A.fact(k + j - kp) * A.fact(mup + kp) *
                                  A.fact(mup - kp - 1))) *
                          A.pow(j * (kp + 1 - mup) - (k + j + kp + 1) * n / 2));
        case SpecialMixed::mu_min:
            return single(A.sqrt(A.num(2 * kp + 1) * A.fact(k + j + kp + 1) * A.fact(k + j - kp) * A.fact(k - j + kp) *
                                 A.fact(j + m) /
                                 (A.fact(2 * k + 1) * A.fact(n) * A.fact(mup - kp - 1) * A.fact(mup + kp) *
                                  A.fact(j - m))) *
                          A.pow(-(k + 1) * (mup - kp - 1) - (k + j - kp + 1) * n / 2));
        case SpecialMixed::mu_p_min:
            return single(A.sqrt(A.fact(k - j + kp) * A.fact(n) * A.fact(k + j + kp + 1) * A.fact(j - m) /
                                 (A.fact(2 * kp) * A.fact(k + j - kp) * A.fact(mu + k) * A.fact(mu - k - 1) *
                                  A.fact(j + m))) *
                          A.pow(-(k - j + kp + 1) * n / 2 - mu * j - m * (k + 1) + (k - j + kp + 1) * (j + m)));
        case SpecialMixed::kp_max:
            return single(A.sqrt(A.fact(2 * k) * A.fact(2 * j) * A.fact(mup + k + j) * A.fact(mu - k - 1) /
                                 (A.fact(2 * k + 2 * j) * A.fact(mup - k - j - 1) * A.fact(mu + k) * A.fact(j + m) *
                                  A.fact(j - m))) *
                          A.pow(-mu * j + m * k));
        case SpecialMixed::kp_min_kj:
            return single(A.sqrt(A.fact(2 * k - 2 * j + 1) * A.fact(2 * j) * A.fact(mup - k + j - 1) * A.fact(mu + k) /
                                 (A.fact(2 * k + 1) * A.fact(mup + k - j) * A.fact(mu - k - 1) * A.fact(j + m) *
                                  A.fact(j - m))) *
                          A.pow(-mu * j - m * (k + 1)));
        case SpecialMixed::kp_min_jk: {
            Real pre = A.sqrt(A.fact(2 * j - 2 * k + 1) * A.fact(mu + k) * A.fact(j + m) /
                              (A.fact(2 * j + 1) * A.fact(2 * k) * A.fact(mup + j - k) * A.fact(mup - j + k - 1) *
                               A.fact(mu - k - 1) * A.fact(j - m))) *
                       A.pow((2 * k + 1) * (j - k) + mu * (j - k + 1) - mup * (k + 1));
            const Rat d = j - 2 * k - m;
            Sum s;
            if (d > 0) {
                // r -> r + (j - 2k - m) keeps every factorial argument nonnegative
                for (int r = 0; r <= to_int(j + m); ++r)
                    s.add(A.fact(j - m + r) * A.fact(mu - k - 1 + r) / (A.fact(Rat(r)) * A.fact(d + r)) *
                          A.pow(-(mu + k + 1) * r));
                return (pre * A.pow(-(mu + k + 1) * d)) * s;
            }
            for (int r = 0; r <= to_int(2 * j - 2 * k); ++r)
                s.add(A.fact(2 * k + r) * A.fact(mup - j + k - 1 + r) / A.fact(Rat(r)) *
                      A.fact_recip(m - j + 2 * k + r) * A.pow(-(mu + k + 1) * r));
            return pre * s;
        }
    }
    throw std::logic_error("unknown special value");
}

}  // namespace

Real special_value_pos(SpecialPos which, const CGPosLabel& label, const QContext& ctx) {
    label.validate();
    if (!label.admissible()) throw DomainError("label violates the selection rules");
    if (!special_applies(which, label)) throw DomainError("label is not at the extreme required by " + special_name(which));
    return adaptive(ctx, [&](const QArith& A) { return pos_value(A, which, PosR(label)); });
}

Real special_value_mixed(SpecialMixed which, const CGMixedLabel& label, const QContext& ctx) {
    label.validate();
    if (!label.admissible()) throw DomainError("label violates the selection rules");
    if (!special_applies(which, label)) throw DomainError("label is not at the extreme required by " + special_name(which));
    return adaptive(ctx, [&](const QArith& A) { return mixed_value(A, which, MixR(label)); });
}

}  // namespace suq
