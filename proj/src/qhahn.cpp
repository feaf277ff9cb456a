// q-Hahn and dual q-Hahn polynomials: evaluation, weights, structural data, identities.
#include "suq/qhahn.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cmath>

namespace suq {

using detail::neg1pow;

void HahnSpec::validate() const {
    if (N < 1) throw DomainError("N must be >= 1");
    if (n < 0 || n > N - 1) throw DomainError("n must lie in 0..N-1");
}

bool DualHahnSpec::orthogonal() const {
    Rat ac = c < 0 ? -c : c;
    return a > Rat(-1, 2) && ac < 1 + a && is_integer(b - a) && b - a >= 1;
}

void DualHahnSpec::validate() const {
    if (n < 0) throw DomainError("n must be >= 0");
    if (!is_integer(b - a) || b - a < 1) throw DomainError("b - a must be a positive integer");
}

namespace {

Rat int_arg(const Rat& x, const char* what) {
    if (!is_integer(x)) throw DomainError(std::string("non-integer factorial argument in ") + what);
    return x;
}

Real dual_lead(const QArith& A, int n) { return A.pow(-Rat(3 * n * (n - 1), 2)) / A.fact(n); }

// Shared interface of the two families at one working precision.
struct HahnFam {
    const QArith& A;
    HahnSpec sp;
    Real x(const Rat& s) const { return hahn_lattice(A, s); }
    Real sigma(const Rat& s) const { return A.pow(2 * s - 2) * A.num(s) * A.num(sp.N + sp.alpha - s); }
    Real phi(const Rat& s) const {
        return -A.pow(2 * s + sp.alpha + sp.beta) * A.num(s + sp.beta + 1) * A.num(s - sp.N + 1);
    }
    // lambda_n / [n]
    Real lam_over(int n) const { return A.pow(sp.beta + 2 - sp.N) * A.num(n + sp.alpha + sp.beta + 1); }
    Real alpha_t(int n) const {
        const Rat ab = sp.alpha + sp.beta;
        return A.pow(sp.N - sp.beta - 2) * A.num(n + 1) * A.num(n + ab + 1) /
               (A.num(2 * n + ab + 2) * A.num(2 * n + ab + 1));
    }
    Real f(int n) const {
        if (n == 0) return Real(0);
        const Rat ab = sp.alpha + sp.beta;
        Real d = A.num(2 * n + ab);
        if (d == 0) throw DomainError("recurrence coefficient has a vanishing denominator");
        Real qm = A.q() - 1 / A.q();
        return (Real(n) - x(n) - qm * A.pow(n + sp.N + sp.alpha - 1) * A.num(sp.beta + n) * A.num(sp.N - n) *
                                     A.num(n) / d) /
               (A.q() * A.q() - 1);
    }
    Real beta_m(int n) const { return f(n) - f(n + 1); }
    Real gamma_m(int n) const {
        if (n == 0) return Real(0);
        const Rat ab = sp.alpha + sp.beta;
        Real d = A.num(2 * n + ab - 1) * A.num(2 * n + ab) * A.num(2 * n + ab) * A.num(2 * n + ab + 1);
        if (d == 0) throw DomainError("recurrence coefficient has a vanishing denominator");
        return A.pow(2 * sp.N + sp.alpha - sp.beta - 4) * A.num(n) * A.num(n + sp.alpha) * A.num(n + sp.beta) *
               A.num(n + ab) * A.num(n + ab + sp.N) * A.num(sp.N - n) / d;
    }
    Sum y(int n, const Rat& s) const {
        HahnSpec t = sp;
        t.n = n;
        return hahn_monic(A, t, s);
    }
    int y_max() const { return sp.N - 1; }
};

struct DualFam {
    const QArith& A;
    DualHahnSpec sp;
    Real x(const Rat& s) const { return dual_lattice(A, s); }
    Real sigma(const Rat& s) const {
        return A.pow(s + sp.c + sp.a - sp.b + 2) * A.num(s - sp.a) * A.num(s + sp.b) * A.num(s - sp.c);
    }
    Real phi(const Rat& s) const {
        return A.pow(-s + sp.c + sp.a - sp.b + 1) * A.num(s + sp.a + 1) * A.num(sp.b - s - 1) * A.num(s + sp.c + 1);
    }
    Real lam_over(int n) const { return A.pow(Rat(1 - n)); }
    Real alpha_t(int n) const { return A.pow(Rat(3 * n)) * A.num(n + 1); }
    Real beta_m(int n) const {
        const Rat &a = sp.a, &b = sp.b, &c = sp.c;
        return A.pow(2 * n - b + c + 1) * A.num(b - a - n - 1) * A.num(a + c + n + 1) +
               A.pow(2 * n + 2 * a + c - b + 1) * A.num(n) * A.num(b - c - n) + A.num(a) * A.num(a + 1);
    }
    Real gamma_m(int n) const {
        const Rat &a = sp.a, &b = sp.b, &c = sp.c;
        return A.pow(2 * (a + c - b) + 4 * n) * A.num(n) * A.num(a + c + n) * A.num(b - c - n) * A.num(b - a - n);
    }
    Sum y(int n, const Rat& s) const {
        DualHahnSpec t = sp;
        t.n = n;
        return dual_monic(A, t, s);
    }
    // the closed form degenerates at n = N
    int y_max() const { return to_int(sp.b - sp.a) - 1; }
};

template <class Fam>
Real tau_n(const Fam& F, int n, const Rat& s) {
    const Rat h = s + Rat(n - 1, 2);
    return (F.phi(s + n) - F.sigma(s)) / (F.x(h + 1) - F.x(h));
}

template <class Fam>
Real tau_n_scale(const Fam& F, int n, const Rat& s) {
    const Rat h = s + Rat(n - 1, 2);
    return (abs(F.phi(s + n)) + abs(F.sigma(s))) / abs(F.x(h + 1) - F.x(h));
}

template <class Fam>
Table1 table_data(const Fam& F, const Rat& s) {
    const QArith& A = F.A;
    const int n = F.sp.n;
    Table1 t;
    t.sigma = F.sigma(s);
    t.phi = F.phi(s);
    t.lambda_n = A.num(n) * F.lam_over(n);
    const Real dxh = F.x(s + Rat(1, 2)) - F.x(s - Rat(1, 2));
    if (dxh == 0 || F.x(s + 1) == F.x(s) || F.x(s) == F.x(s - 1))
        throw DomainError("lattice step vanishes at s = " + rat_str(s));
    t.A = t.phi / ((F.x(s + 1) - F.x(s)) * dxh);
    t.C = t.sigma / ((F.x(s) - F.x(s - 1)) * dxh);
    t.B = -t.A - t.C;
    t.alpha_n = F.alpha_t(n);
    t.beta_n = F.beta_m(n);
    t.gamma_n = n == 0 ? Real(0) : Real(F.gamma_m(n) / F.alpha_t(n - 1));
    t.B_n = neg1pow(n) / A.fact(n);
    t.tau_n = tau_n(F, n, s);
    return t;
}

struct Terms {
    std::vector<Real> lhs, rhs;
    Real floor = 0;  // magnitude of intermediate quantities whose difference may vanish exactly
    double loss = 0;
    void track(const Sum& y) { loss = std::max(loss, cancellation_digits(y)); }
};

template <class Fam>
Terms identity_terms(Identity which, const Fam& F, const Rat& s) {
    const QArith& A = F.A;
    const int n = F.sp.n;
    Terms T;
    auto Y = [&](int k, const Rat& at) {
        Sum v = F.y(k, at);
        T.track(v);
        return v.value;
    };
    if (F.x(s + 1) == F.x(s) || F.x(s) == F.x(s - 1))
        throw DomainError("lattice step vanishes at s = " + rat_str(s));
    if ((which != Identity::diffeq) && n + 1 > F.y_max())
        throw DomainError("identity needs y_{n+1}, which lies outside 0..N-1");
    switch (which) {
        case Identity::diffeq: {
            Table1 t = table_data(F, s);
            const Real y0 = Y(n, s);
            T.lhs = {t.A * Y(n, s + 1), -t.A * y0, -t.C * y0, t.C * Y(n, s - 1), t.lambda_n * y0};
            break;
        }
        case Identity::ttrr: {
            const Real y0 = Y(n, s);
            T.lhs = {F.x(s) * y0};
            T.rhs = {Y(n + 1, s), F.beta_m(n) * y0};
            if (n > 0) T.rhs.push_back(F.gamma_m(n) * Y(n - 1, s));
            break;
        }
        case Identity::lowering:
        case Identity::raising: {
            const Real den = F.lam_over(2 * n + 1);
            if (den == 0 || F.alpha_t(n) == 0) throw DomainError("lowering/raising coefficient is singular");
            const Real pre = -F.lam_over(n) / den;
            const Real r = -A.num(n + 1) / F.alpha_t(n);
            const Real y0 = Y(n, s);
            const Real y1 = Y(n + 1, s);
            Real shift = tau_n(F, n, s);
            Real shift_scale = tau_n_scale(F, n, s);
            if (which == Identity::lowering) {
                const Real d = (Y(n, s) - Y(n, s - 1)) / (F.x(s) - F.x(s - 1));
                T.lhs = {F.sigma(s) * d};
            } else {
                const Real d = (Y(n, s + 1) - y0) / (F.x(s + 1) - F.x(s));
                T.lhs = {F.phi(s) * d};
                const Real extra = A.num(n) * den * (F.x(s + Rat(1, 2)) - F.x(s - Rat(1, 2)));
                shift += extra;
                shift_scale += abs(extra);
            }
            T.rhs = {pre * shift * y0, -pre * r * y1};
            T.floor = abs(pre * y0) * shift_scale;
            break;
        }
    }
    return T;
}

template <class Fam, class Spec>
Real residual_adaptive(Identity which, const Spec& spec, const Rat& s, const QContext& ctx) {
    int guard = 20;
    for (int attempt = 0;; ++attempt) {
        const int work = ctx.digits() + guard;
        PrecisionScope scope(work);
        Fam F{arith(ctx.q(), work), spec};
        Terms T = identity_terms(which, F, s);
        Real diff(0), scale = T.floor;
        for (const auto& v : T.lhs) diff += v, scale = std::max(scale, Real(abs(v)));
        for (const auto& v : T.rhs) diff -= v, scale = std::max(scale, Real(abs(v)));
        if ((T.loss <= guard - 5 || attempt == 3 || guard > 400) ) {
            if (scale == 0) return Real(0);
            return Real(abs(diff) / scale);
        }
        guard = static_cast<int>(T.loss) + 20;
    }
}

}  // namespace

// Pochhammer quotients are folded so no pole is divided out.
Sum hahn_printed(const QArith& A, const HahnSpec& sp, const Rat& s) {
    const int n = sp.n;
    const Rat& al = sp.alpha;
    const Rat& be = sp.beta;
    Real pre = neg1pow(n) * A.pow(n * (al + be + 1 + Rat(n + 1, 2))) * A.fact(sp.N - 1) /
               (A.fact(sp.N - n - 1) * A.fact(n));
    const Real z = A.pow(s - sp.N - al);
    Sum sum;
    Real zk(1);
    for (int k = 0; k <= n; ++k) {
        Real t = A.poch(-n, k) * A.poch(-s, k) * A.poch(al + be + n + 1, k) * A.poch(be + 1 + k, n - k) /
                 (A.poch(1 - sp.N, k) * A.fact(k)) * zk;
        sum.add(t);
        zk *= z;
    }
    return pre * sum;
}

static Real hahn_lead(const QArith& A, const HahnSpec& sp) {
    return A.poch(sp.alpha + sp.beta + sp.n + 1, sp.n) * A.pow(sp.n * (sp.beta + 3 - sp.N)) / A.fact(sp.n);
}

Sum dual_printed(const QArith& A, const DualHahnSpec& sp, const Rat& s) {
    const int n = sp.n;
    Real pre = A.pow(-n * (sp.b - sp.c - 1 + Rat(n - 1, 2))) / A.fact(n);
    const Real z = A.pow(sp.b - sp.c - n);
    Sum sum;
    Real zk(1);
    for (int k = 0; k <= n; ++k) {
        Real t = A.poch(-n, k) * A.poch(sp.a - s, k) * A.poch(sp.a + s + 1, k) / A.fact(k) *
                 A.poch(sp.a - sp.b + 1 + k, n - k) * A.poch(sp.a + sp.c + 1 + k, n - k) * zk;
        sum.add(t);
        zk *= z;
    }
    return pre * sum;
}

Real hahn_lattice(const QArith& A, const Rat& s) { return (A.pow(2 * s) - 1) / (A.q() * A.q() - 1); }
Real dual_lattice(const QArith& A, const Rat& s) { return A.num(s) * A.num(s + 1); }

Sum hahn_monic(const QArith& A, const HahnSpec& spec, const Rat& s) {
    const Real lead = hahn_lead(A, spec);
    if (lead == 0) throw DomainError("monic normalization undefined: (alpha+beta+n+1|q)_n = 0");
    return (1 / lead) * hahn_printed(A, spec, s);
}

Sum dual_monic(const QArith& A, const DualHahnSpec& spec, const Rat& s) {
    return (1 / dual_lead(A, spec.n)) * dual_printed(A, spec, s);
}

Real hahn_eval(const HahnSpec& spec, const Rat& s, const QContext& ctx) {
    spec.validate();
    return adaptive(ctx, [&](const QArith& A) { return hahn_monic(A, spec, s); });
}

Real dual_hahn_eval(const DualHahnSpec& spec, const Rat& s, const QContext& ctx) {
    spec.validate();
    return adaptive(ctx, [&](const QArith& A) { return dual_monic(A, spec, s); });
}

namespace {

Real hahn_weight_at(const QArith& A, const HahnSpec& sp, const Rat& s) {
    return A.pow((sp.alpha + sp.beta) * s) * A.fact(int_arg(s + sp.beta, "rho")) *
           A.fact(int_arg(sp.N + sp.alpha - s - 1, "rho")) / (A.fact(int_arg(s, "rho")) * A.fact(sp.N - s - 1));
}

Real dual_weight_at(const QArith& A, const DualHahnSpec& sp, const Rat& s) {
    return A.pow(-s * (s + 1)) * A.fact(int_arg(s + sp.a, "rho")) * A.fact(int_arg(s + sp.c, "rho")) /
           (A.fact(int_arg(s - sp.a, "rho")) * A.fact(int_arg(s - sp.c, "rho")) * A.fact(int_arg(s + sp.b, "rho")) *
            A.fact(int_arg(sp.b - s - 1, "rho")));
}

}  // namespace

Real hahn_weight(const HahnSpec& sp, const Rat& s, const QContext& ctx) {
    PrecisionScope scope(ctx.digits() + 20);
    return hahn_weight_at(arith(ctx.q(), ctx.digits() + 20), sp, s);
}

Real hahn_norm2(const HahnSpec& sp, const QContext& ctx) {
    PrecisionScope scope(ctx.digits() + 20);
    const QArith& A = arith(ctx.q(), ctx.digits() + 20);
    const int n = sp.n, N = sp.N;
    const Rat &al = sp.alpha, &be = sp.beta;
    int_arg(al, "d_n^2");
    int_arg(be, "d_n^2");
    return A.pow((N - 1) * (be + 1) - 1 + n * (2 * N + al - be - 4)) * A.fact(n) * A.fact(n + al) *
           A.fact(n + be) * A.fact(n + al + be + N) * A.fact(n + al + be) /
           (A.fact(N - n - 1) * A.fact(2 * n + al + be) * A.fact(2 * n + al + be + 1));
}

Real dual_weight(const DualHahnSpec& sp, const Rat& s, const QContext& ctx) {
    PrecisionScope scope(ctx.digits() + 20);
    return dual_weight_at(arith(ctx.q(), ctx.digits() + 20), sp, s);
}

Real dual_norm2(const DualHahnSpec& sp, const QContext& ctx) {
    PrecisionScope scope(ctx.digits() + 20);
    const QArith& A = arith(ctx.q(), ctx.digits() + 20);
    const int n = sp.n;
    const Rat &a = sp.a, &b = sp.b, &c = sp.c;
    Real printed = A.pow(a * c - a * b - b * c + a + c - b + 1 + 2 * n * (a + c - b) - n * n + 5 * n) *
                   A.fact(int_arg(a + c + n, "d_n^2")) /
                   (A.fact(n) * A.fact(int_arg(b - c - n - 1, "d_n^2")) * A.fact(b - a - n - 1));
    return printed * A.pow(Rat(3 * n * (n - 1))) * A.fact(n) * A.fact(n);
}

// The sums cancel to zero for n != m, so the working precision follows the cancellation.
Real hahn_inner(const HahnSpec& spec, int m, const QContext& ctx) {
    HahnSpec other = spec;
    other.n = m;
    spec.validate();
    other.validate();
    return adaptive(ctx, [&](const QArith& A) {
        Sum total;
        for (int s = 0; s < spec.N; ++s)
            total.add(hahn_monic(A, spec, s).value * hahn_monic(A, other, s).value * hahn_weight_at(A, spec, s) *
                      A.pow(Rat(2 * s - 1)));
        return total;
    });
}

Real dual_inner(const DualHahnSpec& spec, int m, const QContext& ctx) {
    DualHahnSpec other = spec;
    other.n = m;
    spec.validate();
    other.validate();
    return adaptive(ctx, [&](const QArith& A) {
        Sum total;
        for (Rat s = spec.a; s < spec.b; s += 1)
            total.add(dual_monic(A, spec, s).value * dual_monic(A, other, s).value * dual_weight_at(A, spec, s) *
                      A.num(2 * s + 1));
        return total;
    });
}

Table1 table1_data(const HahnSpec& spec, const Rat& s, const QContext& ctx) {
    spec.validate();
    PrecisionScope scope(ctx.digits() + 20);
    return table_data(HahnFam{arith(ctx.q(), ctx.digits() + 20), spec}, s);
}

Table1 table1_data(const DualHahnSpec& spec, const Rat& s, const QContext& ctx) {
    spec.validate();
    PrecisionScope scope(ctx.digits() + 20);
    return table_data(DualFam{arith(ctx.q(), ctx.digits() + 20), spec}, s);
}

namespace {

void fill_abc(Table1& t, const Real& dx_fwd, const Real& dx_bwd, const Real& dxh) {
    t.A = t.phi / (dx_fwd * dxh);
    t.C = t.sigma / (dx_bwd * dxh);
    t.B = -t.A - t.C;
}

}  // namespace

Table1 table1_printed(const HahnSpec& sp, const Rat& s, const QContext& ctx) {
    sp.validate();
    PrecisionScope scope(ctx.digits() + 20);
    const QArith& A = arith(ctx.q(), ctx.digits() + 20);
    const int n = sp.n, N = sp.N;
    const Rat &al = sp.alpha, &be = sp.beta, ab = sp.alpha + sp.beta;
    auto x = [&](const Rat& v) { return hahn_lattice(A, v); };
    Table1 t;
    t.sigma = -A.pow(2 * s - 2) * A.num(s) * A.num(N + al - s);
    t.phi = -A.pow(2 * s + ab) * A.num(s + be + 1) * A.num(s - N + 1);
    t.lambda_n = A.pow(be + 2 - N) * A.num(n) * A.num(n + ab + 1);
    fill_abc(t, x(s + 1) - x(s), x(s) - x(s - 1), x(s + Rat(1, 2)) - x(s - Rat(1, 2)));
    t.alpha_n = A.pow(-(be + 2 - N)) * A.num(n + 1) * A.num(n + ab + 1) / (A.num(2 * n + ab + 2) * A.num(2 * n + ab + 1));
    const Real d4 = A.num(2 * n + ab + 1) * A.num(2 * n + ab) * A.num(2 * n + ab) * A.num(2 * n + ab - 1);
    t.beta_n = A.pow(2 * al + 2 * N + n - 2) * A.num(n + ab + 1) * A.num(n + be + 1) * A.num(N - n - 2) /
                   (A.num(2 * n + ab + 2) * A.num(2 * n + ab + 1)) +
               A.pow(-(2 * N + be + n + 3 * (al + 1))) * A.num(n + al) * A.num(n + ab + N) * A.num(N - n) * A.num(n) /
                   (d4 * A.num(N - n - 1));
    t.gamma_n = A.pow(-N - al - 4) * A.num(n + al) * A.num(n + be) * A.num(n + ab + N) * A.num(N - n) / d4;
    t.B_n = neg1pow(n) / A.fact(n);
    t.tau_n = A.pow(n + ab + 1) * A.num(s + n + be + 1) * A.num(N - s - n - 1) + A.pow(-n - 1) * A.num(s) * A.num(N + al - s);
    return t;
}

Table1 table1_printed(const DualHahnSpec& sp, const Rat& s, const QContext& ctx) {
    sp.validate();
    PrecisionScope scope(ctx.digits() + 20);
    const QArith& A = arith(ctx.q(), ctx.digits() + 20);
    const int n = sp.n;
    const Rat &a = sp.a, &b = sp.b, &c = sp.c;
    const Rat h = Rat(n, 2);
    auto x = [&](const Rat& v) { return dual_lattice(A, v); };
    Table1 t;
    t.sigma = A.pow(s + c + a - b + 2) * A.num(s - a) * A.num(s + b) * A.num(s - c);
    t.phi = A.pow(-s + c + a - b + 1) * A.num(s + a + 1) * A.num(b - s - 1) * A.num(s + c + 1);
    t.lambda_n = A.pow(Rat(1 - n)) * A.num(n);
    fill_abc(t, x(s + 1) - x(s), x(s) - x(s - 1), x(s + Rat(1, 2)) - x(s - Rat(1, 2)));
    t.alpha_n = A.pow(Rat(3 * n)) * A.num(n + 1);
    t.beta_n = A.pow(2 * n - b + c + 1) * A.num(b - a - n + 1) * A.num(a + c + n + 1) +
               A.pow(2 * n + 2 * a + c - b + 1) * A.num(n) * A.num(b - c - n) + A.num(a) * A.num(a + 1);
    t.gamma_n = A.pow(n + 3 + 2 * (c + a - b)) * A.num(n + a + c) * A.num(b - a - n) * A.num(b - c - n);
    t.B_n = neg1pow(n) / A.fact(n);
    t.tau_n = -A.pow(Rat(2 * n)) * A.num(s + h) * A.num(s + h + 1) + A.pow(c - b + n + 1) * A.num(c + h) * A.num(b - h) +
              A.pow(a + c - b + 1 - h) * A.num(a + h + 1) * A.num(b - c - n - 1);
    return t;
}

std::string identity_name(Identity id) {
    switch (id) {
        case Identity::diffeq: return "diffeq";
        case Identity::ttrr: return "ttrr";
        case Identity::lowering: return "lowering";
        case Identity::raising: return "raising";
    }
    return "?";
}

Real residual(Identity which, const HahnSpec& spec, const Rat& s, const QContext& ctx) {
    spec.validate();
    return residual_adaptive<HahnFam>(which, spec, s, ctx);
}

Real residual(Identity which, const DualHahnSpec& spec, const Rat& s, const QContext& ctx) {
    spec.validate();
    return residual_adaptive<DualFam>(which, spec, s, ctx);
}

}  // namespace suq
