// Clebsch-Gordan coefficients expressed through q-Hahn and dual q-Hahn polynomials.
#include "suq/qhahn.hpp"

#include "detail.hpp"

namespace suq {

using detail::MixR;
using detail::neg1pow;
using detail::PosR;

std::string connection_name(Connection c) {
    switch (c) {
        case Connection::pos_hahn: return "pos_hahn";
        case Connection::pos_dual: return "pos_dual";
        case Connection::mixed_hahn: return "mixed_hahn";
        case Connection::mixed_dual: return "mixed_dual";
    }
    return "?";
}

int pos_dual_sign(const CGPosLabel& l) { return neg1pow(R(l.kappa - l.kappa1 - l.mu2)); }

Real cg_from_polynomials(Connection which, const CGPosLabel& label, const QContext& ctx) {
    label.validate();
    if (which != Connection::pos_hahn && which != Connection::pos_dual)
        throw DomainError("connection " + connection_name(which) + " applies to mixed couplings");
    if (!label.admissible()) return Real(0);
    const PosR L(label);
    if (which == Connection::pos_hahn) {
        HahnSpec sp{to_int(L.k - L.k1 - L.k2 - 1), to_int(L.mu - L.k1 - L.k2 - 1), 2 * L.k2 + 1, 2 * L.k1 + 1};
        const Rat s = L.m1 - L.k1 - 1;
        Real w = hahn_weight(sp, s, ctx) / hahn_norm2(sp, ctx);
        return adaptive(ctx, [&](const QArith& A) {
            return (neg1pow(sp.n) * A.sqrt(w * A.pow(2 * s - 1))) * hahn_monic(A, sp, s);
        });
    }
    DualHahnSpec sp{to_int(L.m2 - L.k2 - 1), L.k1 + L.k2 + 1, L.mu, L.k2 - L.k1};
    const Rat s = L.k;
    Real w = dual_weight(sp, s, ctx) / dual_norm2(sp, ctx);
    return adaptive(ctx, [&](const QArith& A) {
        return (pos_dual_sign(label) * A.sqrt(w * A.num(2 * s + 1))) * dual_monic(A, sp, s);
    });
}

namespace {

// Hahn form: evaluated at base 1/q.
Sum mixed_hahn(const QArith& A, const MixR& L, const QContext& ctx) {
    const Rat k = L.k, mu = L.mu, j = L.j, m = L.m, kp = L.kp, mup = L.mup;
    const Rat n = kp - k + j;
    const Rat e = -(k - j + kp + 1) * n / 2 - mu * j - m * (k + 1) + n * (2 * k - 2 * j + 1 + (n + 1) / 2);
    Real gamma = A.sqrt(A.num(2 * kp + 1) * A.fact(k - j + kp) * A.fact(k + j - kp) * A.fact(n) * A.fact(mu + k) *
                        A.fact(mup - kp - 1) /
                        (A.fact(k + j + kp + 1) * A.fact(mup + kp) * A.fact(mu - k - 1) * A.fact(j + m) *
                         A.fact(j - m))) *
                 A.pow(e);
    HahnSpec sp{to_int(n), to_int(2 * j + 1), k - j + mup, k - j - mup};
    const QArith& Ainv = arith(ctx.inverse().q(), A.digits());
    return gamma * hahn_printed(Ainv, sp, j + m);
}

// Dual form: evaluated at base q.
Sum mixed_dual(const QArith& A, const MixR& L) {
    const Rat k = L.k, mu = L.mu, j = L.j, m = L.m, kp = L.kp, mup = L.mup;
    const Rat e = m * mu + 2 * j * mup + j * m + 2 * j * j - j + 3 * m * (m - 1) / 2 - kp * (kp + 1) / 2 +
                  k * (k + 1) / 2 - 2 * mu * j;
    Real gamma = A.sqrt(A.num(2 * kp + 1) * A.fact(k - j + kp) * A.fact(mu + k) * A.fact(mu - k - 1) *
                        A.fact(j + m) * A.fact(j - m) /
                        (A.fact(k + j + kp + 1) * A.fact(j - k + kp) * A.fact(k + j - kp) * A.fact(mup + kp) *
                         A.fact(mup - kp - 1))) *
                 A.pow(e);
    const int n = to_int(j + m);
    DualHahnSpec sp{n, k - j, k + j + 1, -mup};
    return gamma * dual_printed(A, sp, kp);
}

}  // namespace

Real cg_from_polynomials(Connection which, const CGMixedLabel& label, const QContext& ctx) {
    label.validate();
    if (which != Connection::mixed_hahn && which != Connection::mixed_dual)
        throw DomainError("connection " + connection_name(which) + " applies to positive couplings");
    if (!label.admissible()) return Real(0);
    const MixR L(label);
    if (which == Connection::mixed_hahn)
        return adaptive(ctx, [&](const QArith& A) { return mixed_hahn(A, L, ctx); });
    return adaptive(ctx, [&](const QArith& A) { return mixed_dual(A, L); });
}

Real cg_from_polynomials_as_printed(Connection which, const CGMixedLabel& label, const QContext& ctx) {
    label.validate();
    if (which != Connection::mixed_hahn && which != Connection::mixed_dual)
        throw DomainError("only the mixed connections have a printed form");
    if (!label.admissible()) return Real(0);
    const MixR L(label);
    const Rat k = L.k, mu = L.mu, j = L.j, m = L.m, kp = L.kp, mup = L.mup;
    return adaptive(ctx, [&](const QArith& A) {
        if (which == Connection::mixed_hahn) {
            Real gamma = A.sqrt(A.num(2 * kp + 1) * A.fact(k - j + kp) * A.fact(mu + k) * A.fact(mup - kp - 1) /
                                (A.fact(k + j + kp + 1) * A.fact(j - k + kp) * A.fact(k + j - kp) *
                                 A.fact(mup + kp) * A.fact(mu - k - 1) * A.fact(j + m) * A.fact(j - m))) *
                         A.pow(mu * j - m * (k + 1) + (k - j + 1) * (kp - k + 1)) * A.fact(2 * j);
            HahnSpec sp{to_int(kp - k + j), to_int(2 * j + 1), k - j - kp, k - j + kp};
            return gamma * hahn_printed(arith(ctx.inverse().q(), A.digits()), sp, j + m);
        }
        Real gamma = A.sqrt(A.num(2 * kp + 1) * A.fact(k - j + kp) * A.fact(mu + k) * A.fact(mu - k - 1) *
                            A.fact(j + m) * A.fact(j - m) /
                            (A.fact(k + j + kp + 1) * A.fact(j - k + kp) * A.fact(k + j - kp) * A.fact(mup + kp) *
                             A.fact(mup - kp - 1))) *
                     A.pow(m * mu + 2 * j * mup + j * m + 2 * j * j - j + 3 * m * (m - 1) / 2 - kp * (kp + 1) / 2 +
                           k * (k + 1) / 2);
        return gamma * dual_printed(A, DualHahnSpec{to_int(j + m), k - j, k + j + 1, -mup}, kp);
    });
}

}  // namespace suq
