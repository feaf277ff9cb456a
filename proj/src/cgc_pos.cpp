// Five equivalent closed forms for <kappa1 mu1, kappa2 mu2 | kappa mu>.
#include "detail.hpp"

#include <algorithm>

namespace suq {

using detail::neg1pow;
using detail::PosR;

namespace {

// sqrt([m1+k1]! [m2+k2]! [m2-k2-1]! / ([mu+k]! [mu-k-1]! [m1-k1-1]!))
Real weight_root(const QArith& A, const PosR& L) {
    return A.sqrt(A.fact(L.m1 + L.k1) * A.fact(L.m2 + L.k2) * A.fact(L.m2 - L.k2 - 1) /
                  (A.fact(L.mu + L.k) * A.fact(L.mu - L.k - 1) * A.fact(L.m1 - L.k1 - 1)));
}

// sqrt([m1+k1]! [m2+k2]! / ([mu+k]! [mu-k-1]! [m1-k1-1]! [m2-k2-1]!))
Real weight_root_sym(const QArith& A, const PosR& L) {
    return A.sqrt(A.fact(L.m1 + L.k1) * A.fact(L.m2 + L.k2) /
                  (A.fact(L.mu + L.k) * A.fact(L.mu - L.k - 1) * A.fact(L.m1 - L.k1 - 1) *
                   A.fact(L.m2 - L.k2 - 1)));
}

Sum sum_fwd(const QArith& A, const PosR& L) {
    const Rat n = L.k - L.k1 - L.k2 - 1;
    Real pre = A.sqrt(A.num(2 * L.k + 1) * A.fact(L.k - L.k1 + L.k2) * A.fact(n) /
                      (A.fact(L.k + L.k1 - L.k2) * A.fact(L.k + L.k1 + L.k2 + 1))) *
               A.pow(-(L.k - L.k1 + L.k2) * n / 2) * weight_root(A, L) *
               A.pow(L.m1 * (L.k + 1) - L.mu * (L.k1 + 1));
    Sum s;
    const int top = to_int(n);
    for (int r = 0; r <= top; ++r) {
        Real t = A.fact(2 * L.k - r) * A.fact(L.mu - L.k - 1 + r) /
                 (A.fact(Rat(r)) * A.fact(L.k - L.k1 + L.k2 - r) * A.fact(n - r)) *
                 A.fact_recip(L.m2 + L.k1 - L.k + r) * A.pow(-(L.m1 + L.k1 + 1) * r);
        s.add(r % 2 ? Real(-t) : t);
    }
    detail::check_bound({n - (top + 1)});
    return pre * s;
}

Sum sum_rev(const QArith& A, const PosR& L) {
    const Rat n = L.k - L.k1 - L.k2 - 1;
    Real pre = neg1pow(n) *
               A.sqrt(A.num(2 * L.k + 1) * A.fact(L.k - L.k1 + L.k2) * A.fact(n) /
                      (A.fact(L.k + L.k1 - L.k2) * A.fact(L.k + L.k1 + L.k2 + 1))) *
               A.pow(-(L.k + L.k1 + L.k2 + 2) * n / 2) * weight_root(A, L) *
               A.pow(L.m1 * (L.k2 + 1) - L.m2 * (L.k1 + 1));
    Sum s;
    const int top = std::min(to_int(n), to_int(L.m2 - L.k2 - 1));
    for (int r = 0; r <= top; ++r) {
        Real t = A.fact(L.k + L.k1 + L.k2 + 1 + r) * A.fact(L.mu - L.k1 - L.k2 - 2 - r) /
                 (A.fact(Rat(r)) * A.fact(n - r) * A.fact(2 * L.k2 + 1 + r) * A.fact(L.m2 - L.k2 - 1 - r)) *
                 A.pow((L.m1 + L.k1 + 1) * r);
        s.add(r % 2 ? Real(-t) : t);
    }
    detail::check_bound({n - (top + 1), L.m2 - L.k2 - 1 - (top + 1)});
    return pre * s;
}

Sum hyp_a(const QArith& A, const PosR& L) {
    const Rat n = L.k - L.k1 - L.k2 - 1;
    Real pre = A.sqrt(A.fact(2 * L.k + 1) * A.fact(2 * L.k) /
                      (A.fact(L.k + L.k1 - L.k2) * A.fact(L.k - L.k1 + L.k2) * A.fact(n) *
                       A.fact(L.k + L.k1 + L.k2 + 1))) *
               A.pow(-(L.k - L.k1 + L.k2) * n / 2) *
               A.sqrt(A.fact(L.mu - L.k - 1) * A.fact(L.m1 + L.k1) * A.fact(L.m2 + L.k2) * A.fact(L.m2 - L.k2 - 1) /
                      (A.fact(L.mu + L.k) * A.fact(L.m1 - L.k1 - 1))) *
               A.pow(L.m1 * (L.k + 1) - L.mu * (L.k1 + 1));
    return pre * A.hyper_reg({-n, L.k1 - L.k2 - L.k, L.mu - L.k}, {-2 * L.k, L.m2 + L.k1 - L.k + 1}, 1,
                             A.pow(-(L.m1 + L.k1 + 1)));
}

Sum hyp_b(const QArith& A, const PosR& L) {
    const Rat n = L.k - L.k1 - L.k2 - 1;
    Real pre = neg1pow(n) / A.fact(2 * L.k2 + 1) *
               A.sqrt(A.num(2 * L.k + 1) * A.fact(L.k - L.k1 + L.k2) * A.fact(L.k + L.k1 + L.k2 + 1) /
                      (A.fact(L.k + L.k1 - L.k2) * A.fact(n))) *
               A.pow(-(L.k + L.k1 + L.k2 + 2) * n / 2) * A.fact(L.mu - L.k1 - L.k2 - 2) * weight_root_sym(A, L) *
               A.pow(L.m1 * (L.k2 + 1) - L.m2 * (L.k1 + 1));
    return pre * A.hyper({-n, L.k + L.k1 + L.k2 + 2, L.k2 + 1 - L.m2}, {2 * L.k2 + 2, L.k1 + L.k2 + 2 - L.mu},
                         A.pow(L.m1 + L.k1 + 1));
}

Sum hyp_c(const QArith& A, const PosR& L) {
    const Rat n = L.k - L.k1 - L.k2 - 1;
    Real pre = A.fact(L.mu - L.k1 - L.k2 - 2) / A.fact(2 * L.k1 + 1) *
               A.sqrt(A.num(2 * L.k + 1) * A.fact(L.k + L.k1 - L.k2) * A.fact(L.k + L.k1 + L.k2 + 1) /
                      (A.fact(L.k - L.k1 + L.k2) * A.fact(n))) *
               A.pow((L.k + L.k1 + L.k2 + 2) * n / 2) * weight_root_sym(A, L) *
               A.pow(L.m1 * (L.k2 + 1) - L.m2 * (L.k1 + 1));
    return pre * A.hyper({-n, L.k + L.k1 + L.k2 + 2, L.k1 + 1 - L.m1}, {2 * L.k1 + 2, L.k1 + L.k2 + 2 - L.mu},
                         A.pow(-L.m2 - L.k2 - 1));
}

}  // namespace

Sum cg_pos_sum(const QArith& A, const CGPosLabel& label, CGMethod method) {
    PosR L(label);
    switch (method) {
        case CGMethod::sum_fwd: return sum_fwd(A, L);
        case CGMethod::sum_rev: return sum_rev(A, L);
        case CGMethod::hyp_a: return hyp_a(A, L);
        case CGMethod::hyp_b: return hyp_b(A, L);
        case CGMethod::hyp_c: return hyp_c(A, L);
    }
    throw std::logic_error("unknown method");
}

Real cg_pos(const CGPosLabel& label, CGMethod method, const QContext& ctx) {
    label.validate();
    if (!label.admissible()) return Real(0);
    return adaptive(ctx, [&](const QArith& A) { return cg_pos_sum(A, label, method); });
}

Real cg_pos_or_zero(const CGPosLabel& label, const QContext& ctx) {
    if (!label.admissible()) return Real(0);
    return cg_pos(label, CGMethod::sum_fwd, ctx);
}

}  // namespace suq
