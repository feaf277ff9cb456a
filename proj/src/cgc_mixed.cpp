// Five equivalent closed forms for <kappa mu, j m | kappa' mu'>.
#include "detail.hpp"

#include <algorithm>

namespace suq {

using detail::MixR;
using detail::neg1pow;

namespace {

// sqrt([2k'+1] [j-k+k']! / ([k+j+k'+1]! [k-j+k']! [k+j-k']!))
Real coupling_root(const QArith& A, const MixR& L) {
    return A.sqrt(A.num(2 * L.kp + 1) * A.fact(L.j - L.k + L.kp) /
                  (A.fact(L.k + L.j + L.kp + 1) * A.fact(L.k - L.j + L.kp) * A.fact(L.k + L.j - L.kp)));
}

// sqrt([mu+k]! [j+m]! / ([mu'+k']! [mu'-k'-1]! [mu-k-1]! [j-m]!))
Real weight_root(const QArith& A, const MixR& L) {
    return A.sqrt(A.fact(L.mu + L.k) * A.fact(L.j + L.m) /
                  (A.fact(L.mup + L.kp) * A.fact(L.mup - L.kp - 1) * A.fact(L.mu - L.k - 1) * A.fact(L.j - L.m)));
}

Sum sum_fwd(const QArith& A, const MixR& L) {
    Real pre = coupling_root(A, L) * A.pow((L.k + L.j - L.kp + 1) * (L.j - L.k + L.kp) / 2) * weight_root(A, L) *
               A.pow(L.mu * (L.kp + 1) - L.mup * (L.k + 1));
    Sum s;
    const int top = to_int(L.j - L.k + L.kp);
    for (int r = 0; r <= top; ++r) {
        s.add(A.fact(2 * L.kp - r) * A.fact(L.k + L.j - L.kp + r) * A.fact(L.mup - L.kp - 1 + r) /
              (A.fact(Rat(r)) * A.fact(L.j - L.k + L.kp - r)) * A.fact_recip(L.m + L.k - L.kp + r) *
              A.pow(-(L.mu + L.k + 1) * r));
    }
    detail::check_bound({L.j - L.k + L.kp - (top + 1)});
    return pre * s;
}

Sum sum_rev(const QArith& A, const MixR& L) {
    Real pre = coupling_root(A, L) * A.pow(-(L.k - L.j + L.kp + 1) * (L.j - L.k + L.kp) / 2) * weight_root(A, L) *
               A.pow(L.mu * (L.k - L.j + 1) - L.mup * (L.k + 1));
    Sum s;
    const int top = std::min(to_int(L.j - L.k + L.kp), to_int(L.j + L.m));
    for (int r = 0; r <= top; ++r) {
        s.add(A.fact(2 * L.j - r) * A.fact(L.k - L.j + L.kp + r) * A.fact(L.mup - L.k + L.j - 1 - r) /
              (A.fact(Rat(r)) * A.fact(L.j - L.k + L.kp - r) * A.fact(L.j + L.m - r)) *
              A.pow((L.mu + L.k + 1) * r));
    }
    detail::check_bound({L.j - L.k + L.kp - (top + 1), L.j + L.m - (top + 1)});
    return pre * s;
}

Sum hyp_a(const QArith& A, const MixR& L) {
    Real pre = A.sqrt(A.fact(2 * L.kp) * A.fact(2 * L.kp + 1) * A.fact(L.k + L.j - L.kp) /
                      (A.fact(L.k + L.j + L.kp + 1) * A.fact(L.k - L.j + L.kp) * A.fact(L.j - L.k + L.kp))) *
               A.pow((L.k + L.j - L.kp + 1) * (L.j - L.k + L.kp) / 2) *
               A.sqrt(A.fact(L.mup - L.kp - 1) * A.fact(L.mu + L.k) * A.fact(L.j + L.m) /
                      (A.fact(L.mup + L.kp) * A.fact(L.mu - L.k - 1) * A.fact(L.j - L.m))) *
               A.pow(L.mu * (L.kp + 1) - L.mup * (L.k + 1));
    return pre * A.hyper_reg({L.k - L.j - L.kp, L.mup - L.kp, L.k + L.j - L.kp + 1}, {-2 * L.kp, L.m + L.k - L.kp + 1},
                             1, A.pow(-(L.mu + L.k + 1)));
}

Sum hyp_b(const QArith& A, const MixR& L) {
    Real pre = A.fact(2 * L.j) *
               A.sqrt(A.num(2 * L.kp + 1) * A.fact(L.k - L.j + L.kp) /
                      (A.fact(L.k + L.j + L.kp + 1) * A.fact(L.j - L.k + L.kp) * A.fact(L.k + L.j - L.kp))) *
               A.pow(-(L.k - L.j + L.kp + 1) * (L.j - L.k + L.kp) / 2) * A.fact(L.mup - L.k + L.j - 1) *
               A.sqrt(A.fact(L.mu + L.k) / (A.fact(L.mup + L.kp) * A.fact(L.mup - L.kp - 1) * A.fact(L.mu - L.k - 1) *
                                            A.fact(L.j + L.m) * A.fact(L.j - L.m))) *
               A.pow(-L.mu * L.j - L.m * (L.k + 1));
    return pre * A.hyper({L.k - L.j - L.kp, -L.j - L.m, L.k - L.j + L.kp + 1}, {-2 * L.j, L.k - L.j - L.mup + 1},
                         A.pow(L.mu + L.k + 1));
}

Sum hyp_c(const QArith& A, const MixR& L) {
    Real pre = neg1pow(L.j - L.k + L.kp) *
               A.sqrt(A.fact(2 * L.kp) * A.fact(2 * L.kp + 1) * A.fact(L.k + L.j - L.kp) /
                      (A.fact(L.k + L.j + L.kp + 1) * A.fact(L.k - L.j + L.kp) * A.fact(L.j - L.k + L.kp))) *
               A.sqrt(A.fact(L.mup - L.kp - 1) * A.fact(L.mu + L.k) * A.fact(L.mu - L.k - 1) /
                      (A.fact(L.mup + L.kp) * A.fact(L.j + L.m) * A.fact(L.j - L.m))) *
               A.pow(-L.mu * L.j - L.m * (L.j + L.kp + 1) + (L.k + L.j + L.kp + 1) * (L.j - L.k + L.kp) / 2);
    return pre * A.hyper_reg({L.k - L.j - L.kp, L.mup - L.kp, -L.k - L.j - L.kp - 1}, {-2 * L.kp, L.mu - L.j - L.kp},
                             1, A.pow(L.m - L.j));
}

}  // namespace

Sum cg_mixed_sum(const QArith& A, const CGMixedLabel& label, CGMethod method) {
    MixR L(label);
    switch (method) {
        case CGMethod::sum_fwd: return sum_fwd(A, L);
        case CGMethod::sum_rev: return sum_rev(A, L);
        case CGMethod::hyp_a: return hyp_a(A, L);
        case CGMethod::hyp_b: return hyp_b(A, L);
        case CGMethod::hyp_c: return hyp_c(A, L);
    }
    throw std::logic_error("unknown method");
}

Real cg_mixed(const CGMixedLabel& label, CGMethod method, const QContext& ctx) {
    label.validate();
    if (!label.admissible()) return Real(0);
    return adaptive(ctx, [&](const QArith& A) { return cg_mixed_sum(A, label, method); });
}

Real cg_mixed_or_zero(const CGMixedLabel& label, const QContext& ctx) {
    if (!label.admissible()) return Real(0);
    return cg_mixed(label, CGMethod::sum_fwd, ctx);
}

}  // namespace suq
