// Closed-form Clebsch-Gordan coefficients of su_q(1,1).
#pragma once

#include "suq/reps.hpp"

#include <string>
#include <vector>

namespace suq {

// <kappa1 mu1, kappa2 mu2 | kappa mu>
struct CGPosLabel {
    HalfInt kappa1, mu1, kappa2, mu2, kappa, mu;

    bool well_formed() const;  // component labels valid
    bool admissible() const;   // well formed and selection rules hold
    void validate() const;     // throws DomainError when not well formed
    std::vector<int> twice() const;
};

// <kappa mu, j m | kappa' mu'>
struct CGMixedLabel {
    HalfInt kappa, mu, j, m, kappa_p, mu_p;

    bool well_formed() const;
    bool admissible() const;
    void validate() const;
    std::vector<int> twice() const;
};

enum class CGMethod { sum_fwd, sum_rev, hyp_a, hyp_b, hyp_c };
inline constexpr CGMethod all_methods[] = {CGMethod::sum_fwd, CGMethod::sum_rev, CGMethod::hyp_a,
                                           CGMethod::hyp_b, CGMethod::hyp_c};
std::string method_name(CGMethod m);
CGMethod parse_method(const std::string& name);

Real cg_pos(const CGPosLabel& label, CGMethod method, const QContext& ctx);
Real cg_mixed(const CGMixedLabel& label, CGMethod method, const QContext& ctx);

// Same values, but zero for labels that are not even well formed.
Real cg_pos_or_zero(const CGPosLabel& label, const QContext& ctx);
Real cg_mixed_or_zero(const CGMixedLabel& label, const QContext& ctx);

// Raw evaluators at a fixed working precision (label must be admissible).
Sum cg_pos_sum(const QArith& A, const CGPosLabel& label, CGMethod method);
Sum cg_mixed_sum(const QArith& A, const CGMixedLabel& label, CGMethod method);

enum class SpecialPos { mu2_min, mu1_min, mu_min, kappa_min };
enum class SpecialMixed { m_max, m_min, mu_min, mu_p_min, kp_max, kp_min_kj, kp_min_jk };
std::string special_name(SpecialPos w);
std::string special_name(SpecialMixed w);

// The label must sit at the extreme value named by `which`.
Real special_value_pos(SpecialPos which, const CGPosLabel& label, const QContext& ctx);
Real special_value_mixed(SpecialMixed which, const CGMixedLabel& label, const QContext& ctx);
bool special_applies(SpecialPos which, const CGPosLabel& label);
bool special_applies(SpecialMixed which, const CGMixedLabel& label);

struct SymmetryResult {
    Real lhs, rhs;
};
// lhs at q; rhs = (-1)^{kappa-kappa1-kappa2-1} times the 1<->2 swapped coefficient at 1/q.
SymmetryResult symmetry_check_pos(const CGPosLabel& label, const QContext& ctx);

enum class Recurrence { c1, c2, c3 };
std::string recurrence_name(Recurrence r);
struct RecurrenceResult {
    Real lhs, rhs, scale;
    Real residual;  // |lhs - rhs| / scale
};
RecurrenceResult recurrence_residual(Recurrence which, const CGMixedLabel& label, const QContext& ctx);

// All admissible (kappa, mu1) for fixed kappa1, kappa2, mu, ordered by (kappa, mu1).
std::vector<CGPosLabel> enumerate_couplings_pos(HalfInt kappa1, HalfInt kappa2, HalfInt mu);
// All admissible kappa' for fixed kappa, mu, j, m.
std::vector<CGMixedLabel> enumerate_couplings_mixed(HalfInt kappa, HalfInt mu, HalfInt j, HalfInt m);
// kappa' values allowed for fixed kappa, j.
std::vector<HalfInt> coupled_kappas_mixed(HalfInt kappa, HalfInt j);
// Upper mu1 limit printed next to the first orthogonality relation, for comparison.
HalfInt printed_mu1_upper(HalfInt kappa1, HalfInt kappa2, HalfInt mu);

}  // namespace suq
