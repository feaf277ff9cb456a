// q-Hahn and dual q-Hahn polynomials on non-uniform lattices, and their
// connection to Clebsch-Gordan coefficients.
#pragma once

#include "suq/cgc.hpp"

namespace suq {

// h_n^{alpha,beta}(s,N)_q on x(s) = (q^{2s}-1)/(q^2-1); monic in x(s).
struct HahnSpec {
    int n = 0;
    int N = 1;
    Rat alpha, beta;
    bool orthogonal() const { return alpha > -1 && beta > -1; }
    void validate() const;
};

// W_n^{(c)}(s,a,b)_q on x(s) = [s][s+1]; monic in x(s). N = b - a.
struct DualHahnSpec {
    int n = 0;
    Rat a, b, c;
    int N() const { return to_int(b - a); }
    bool orthogonal() const;
    void validate() const;
};

Real hahn_eval(const HahnSpec& spec, const Rat& s, const QContext& ctx);
Real dual_hahn_eval(const DualHahnSpec& spec, const Rat& s, const QContext& ctx);

// Raw evaluators at a fixed working precision. The printed normalizations are
// h_printed = h * (alpha+beta+n+1|q)_n q^{n(beta+3-N)} / [n]! and W_printed = W q^{-3n(n-1)/2} / [n]!.
Sum hahn_monic(const QArith& A, const HahnSpec& spec, const Rat& s);
Sum hahn_printed(const QArith& A, const HahnSpec& spec, const Rat& s);
Sum dual_printed(const QArith& A, const DualHahnSpec& spec, const Rat& s);
Sum dual_monic(const QArith& A, const DualHahnSpec& spec, const Rat& s);
Real hahn_lattice(const QArith& A, const Rat& s);
Real dual_lattice(const QArith& A, const Rat& s);

// Weight rho(s) and squared norm d_n^2 of the monic polynomials.
// Factorial arguments must be integers (the q-Gamma extension is not provided).
Real hahn_weight(const HahnSpec& spec, const Rat& s, const QContext& ctx);
Real hahn_norm2(const HahnSpec& spec, const QContext& ctx);
Real dual_weight(const DualHahnSpec& spec, const Rat& s, const QContext& ctx);
Real dual_norm2(const DualHahnSpec& spec, const QContext& ctx);

// sum_{s=a}^{b-1} y_n y_m rho Delta x(s-1/2); spec.n is used as n.
Real hahn_inner(const HahnSpec& spec, int m, const QContext& ctx);
Real dual_inner(const DualHahnSpec& spec, int m, const QContext& ctx);

// Difference-equation and recurrence data. Recurrence entries refer to the
// printed normalization of the polynomials.
struct Table1 {
    Real sigma, phi, lambda_n, A, B, C, alpha_n, beta_n, gamma_n, B_n, tau_n;
};
Table1 table1_data(const HahnSpec& spec, const Rat& s, const QContext& ctx);
Table1 table1_data(const DualHahnSpec& spec, const Rat& s, const QContext& ctx);
// Entries exactly as tabulated (A, B, C derived from them), for comparison.
Table1 table1_printed(const HahnSpec& spec, const Rat& s, const QContext& ctx);
Table1 table1_printed(const DualHahnSpec& spec, const Rat& s, const QContext& ctx);

enum class Identity { diffeq, ttrr, lowering, raising };
std::string identity_name(Identity id);

// Scale-relative residual of the identity at (spec.n, s).
Real residual(Identity which, const HahnSpec& spec, const Rat& s, const QContext& ctx);
Real residual(Identity which, const DualHahnSpec& spec, const Rat& s, const QContext& ctx);

enum class Connection { pos_hahn, pos_dual, mixed_hahn, mixed_dual };
std::string connection_name(Connection c);

Real cg_from_polynomials(Connection which, const CGPosLabel& label, const QContext& ctx);
Real cg_from_polynomials(Connection which, const CGMixedLabel& label, const QContext& ctx);

// Mixed connections with the tabulated substitutions and prefactors, which do not
// reproduce the coefficients; kept so the deviation can be reported.
Real cg_from_polynomials_as_printed(Connection which, const CGMixedLabel& label, const QContext& ctx);

// Sign relating the dual q-Hahn connection to the coefficient: (-1)^{kappa-kappa1-mu2}.
int pos_dual_sign(const CGPosLabel& label);

}  // namespace suq
