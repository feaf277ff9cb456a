// Generator actions for the positive discrete series of su_q(1,1) and finite su_q(2) irreps.
#pragma once

#include "suq/qcore.hpp"

namespace suq {

enum class Sign { plus = 1, minus = -1 };
inline int sgn(Sign s) { return static_cast<int>(s); }

enum class Kind { pos_pos, mixed };

// |kappa mu>, mu = kappa+1, kappa+2, ...
struct PosSeriesLabel {
    HalfInt kappa;
    HalfInt mu;
    bool valid() const;
    void validate() const;  // throws DomainError naming the violated rule
};

// |j m>, m = -j, ..., j
struct FiniteRepLabel {
    HalfInt j;
    HalfInt m;
    bool valid() const;
    void validate() const;
};

// Out-of-range targets give coefficient 0 and annihilated = true; label is then a sentinel.
template <class L>
struct LadderResult {
    Real coefficient;
    L label;
    bool annihilated = false;
};

Real k0_action(const PosSeriesLabel& s);
LadderResult<PosSeriesLabel> kpm_action(Sign sign, const PosSeriesLabel& s, const QContext& ctx);
LadderResult<PosSeriesLabel> kpm_power_coeff(Sign sign, int r, const PosSeriesLabel& s, const QContext& ctx);
Real casimir_eigenvalue(const Rat& kappa, const QContext& ctx);
LadderResult<FiniteRepLabel> jpm_action(Sign sign, const FiniteRepLabel& s, int r, const QContext& ctx);

// Coefficient-level versions used by the oracle (no validation, 0 outside range).
Real kpm_coeff(const QArith& A, Sign sign, HalfInt kappa, HalfInt mu);
Real jpm_coeff(const QArith& A, Sign sign, HalfInt j, HalfInt m);

// ell-th term of the binomial expansion of a coupled generator power:
// binom * (+-1)^{r-ell} * X^ell(1) Y^{r-ell}(2) q^{ell*W0(2) - (r-ell)*K0(1)}
// with Y = K+- (pos_pos) or J+- (mixed), W0 = K0 or J0.
struct CoupledTerm {
    Real binom;
    int sign;
    int power_first;
    int power_second;
    int exp_coeff_second;  // multiplies the weight of factor 2
    int exp_coeff_first;   // multiplies the weight of factor 1
};
CoupledTerm coupled_generator_term(Kind kind, Sign sign, int ell, int r, const QContext& ctx);

}  // namespace suq
