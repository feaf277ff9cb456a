#include "suq/reps.hpp"

namespace suq {

bool PosSeriesLabel::valid() const {
    return kappa.twice() >= 0 && mu >= kappa + 1 && (mu - kappa).is_integer();
}

void PosSeriesLabel::validate() const {
    if (kappa.twice() < 0) throw DomainError("kappa must be >= 0");
    if (!(mu - kappa).is_integer()) throw DomainError("mu - kappa must be an integer");
    if (mu < kappa + 1) throw DomainError("mu must be >= kappa + 1");
}

bool FiniteRepLabel::valid() const {
    return j.twice() >= 0 && (j - m).is_integer() && m <= j && -j <= m;
}

void FiniteRepLabel::validate() const {
    if (j.twice() < 0) throw DomainError("j must be >= 0");
    if (!(j - m).is_integer()) throw DomainError("j - m must be an integer");
    if (m > j || m < -j) throw DomainError("m must lie in [-j, j]");
}

Real kpm_coeff(const QArith& A, Sign sign, HalfInt kappa, HalfInt mu) {
    if (sign == Sign::plus) return A.sqrt(A.num(R(mu - kappa)) * A.num(R(mu + kappa + 1)));
    if (mu - 1 < kappa + 1) return Real(0);
    return A.sqrt(A.num(R(mu + kappa)) * A.num(R(mu - kappa - 1)));
}

Real jpm_coeff(const QArith& A, Sign sign, HalfInt j, HalfInt m) {
    if (sign == Sign::plus) {
        if (m + 1 > j) return Real(0);
        return A.sqrt(A.num(R(j - m)) * A.num(R(j + m + 1)));
    }
    if (m - 1 < -j) return Real(0);
    return A.sqrt(A.num(R(j + m)) * A.num(R(j - m + 1)));
}

Real k0_action(const PosSeriesLabel& s) {
    s.validate();
    return Real(s.mu.twice()) / 2;
}

LadderResult<PosSeriesLabel> kpm_action(Sign sign, const PosSeriesLabel& s, const QContext& ctx) {
    return kpm_power_coeff(sign, 1, s, ctx);
}

LadderResult<PosSeriesLabel> kpm_power_coeff(Sign sign, int r, const PosSeriesLabel& s, const QContext& ctx) {
    s.validate();
    if (r < 0) throw DomainError("power must be nonnegative");
    PrecisionScope scope(ctx.digits());
    const QArith& A = arith(ctx.q(), ctx.digits());
    Rat k = R(s.kappa), mu = R(s.mu);
    PosSeriesLabel target{s.kappa, s.mu + HalfInt(sgn(sign) * r)};
    if (sign == Sign::plus) {
        Real c = A.sqrt(A.fact(mu + k + r) * A.fact(mu - k - 1 + r) / (A.fact(mu + k) * A.fact(mu - k - 1)));
        return {c, target, false};
    }
    if (mu - k - 1 - r < 0) return {Real(0), s, true};
    Real c = A.sqrt(A.fact(mu + k) * A.fact(mu - k - 1) / (A.fact(mu + k - r) * A.fact(mu - k - 1 - r)));
    return {c, target, false};
}

Real casimir_eigenvalue(const Rat& kappa, const QContext& ctx) {
    PrecisionScope scope(ctx.digits());
    const QArith& A = arith(ctx.q(), ctx.digits());
    return A.num(kappa + 1) * A.num(kappa);
}

LadderResult<FiniteRepLabel> jpm_action(Sign sign, const FiniteRepLabel& s, int r, const QContext& ctx) {
    s.validate();
    if (r < 0) throw DomainError("power must be nonnegative");
    PrecisionScope scope(ctx.digits());
    const QArith& A = arith(ctx.q(), ctx.digits());
    Rat j = R(s.j), m = R(s.m);
    FiniteRepLabel target{s.j, s.m + HalfInt(sgn(sign) * r)};
    if (!target.valid()) return {Real(0), s, true};
    Real c = sign == Sign::plus
                 ? A.sqrt(A.fact(j - m) * A.fact(j + m + r) / (A.fact(j + m) * A.fact(j - m - r)))
                 : A.sqrt(A.fact(j + m) * A.fact(j - m + r) / (A.fact(j - m) * A.fact(j + m - r)));
    return {c, target, false};
}

CoupledTerm coupled_generator_term(Kind kind, Sign sign, int ell, int r, const QContext& ctx) {
    if (ell < 0 || ell > r) throw DomainError("binomial term index out of range");
    PrecisionScope scope(ctx.digits());
    const QArith& A = arith(ctx.q(), ctx.digits());
    CoupledTerm t;
    t.binom = A.fact(Rat(r)) / (A.fact(Rat(ell)) * A.fact(Rat(r - ell)));
    t.sign = (kind == Kind::mixed && sign == Sign::minus && (r - ell) % 2) ? -1 : 1;
    t.power_first = ell;
    t.power_second = r - ell;
    t.exp_coeff_second = ell;
    t.exp_coeff_first = -(r - ell);
    return t;
}

}  // namespace suq
