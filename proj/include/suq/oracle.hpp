// Brute-force Clebsch-Gordan coefficients from the projection-operator series
// and from an explicit kernel of the coupled lowering operator.
#pragma once

#include "suq/reps.hpp"

#include <map>
#include <utility>
#include <vector>

namespace suq {

struct TruncationError : DomainError {
    using DomainError::DomainError;
};

// Vector in D^{kappa1} (x) D^{kappa2} (pos_pos) or D^{kappa} (x) D^j (mixed).
// Keys are twice-values of the two component weights.
class TensorState {
public:
    using Key = std::pair<int, int>;

    TensorState(Kind kind, HalfInt first_kappa, HalfInt second, HalfInt mu_cut);

    Kind kind() const { return kind_; }
    HalfInt first_kappa() const { return k1_; }
    HalfInt second() const { return k2_; }
    HalfInt mu_cut() const { return cut_; }
    bool tainted() const { return tainted_; }
    void mark_tainted() { tainted_ = true; }

    // Adds v to the amplitude; scale tracks the sum of |contributions| for cancellation checks.
    void add(Key key, const Real& v, const Real& scale);
    void add(HalfInt w1, HalfInt w2, const Real& v) { add({w1.twice(), w2.twice()}, v, abs(v)); }
    Real amplitude(HalfInt w1, HalfInt w2) const;
    Sum component(Key key) const;
    Real norm2() const;
    bool empty() const;
    bool admissible(Key key) const;
    const std::map<Key, Sum>& entries() const { return amp_; }

    TensorState zero_like() const { return TensorState(kind_, k1_, k2_, cut_); }
    void scale_by(const Real& c);
    void accumulate(const TensorState& o, const Real& c);

private:
    Kind kind_;
    HalfInt k1_, k2_, cut_;
    bool tainted_ = false;
    std::map<Key, Sum> amp_;
};

// Coupled K+-(12) (pos_pos) or K'+-(12) (mixed).
TensorState apply_coupled(Sign sign, const TensorState& state, const QArith& A);
TensorState apply_coupled(Sign sign, const TensorState& state, const QContext& ctx);

// sum_{r<=2kappa} (-1)^r [2kappa-r]!/([r]![2kappa]!) K+^r K-^r applied to a weight-(kappa+1) state.
TensorState project_minimal(HalfInt kappa, const TensorState& state, const QArith& A);
TensorState project_minimal(HalfInt kappa, const TensorState& state, const QContext& ctx);

struct ProjectionSpec {
    HalfInt kappa_target;
    HalfInt mu_target;
    HalfInt mu_bar;
    void validate() const;
};

// Generalized operator N(mu) K+^{mu-kappa-1} P K-^{mu_bar-kappa-1} N(mu_bar).
TensorState project_general(const ProjectionSpec& spec, const TensorState& state, const QArith& A);

// Coupled vectors |kappa mu> for mu = kappa+1 .. mu_max as maps (w1, w2) -> coefficient.
// second = kappa2 (pos_pos) or j (mixed); kappa is the coupled label (kappa or kappa').
struct CoupledColumn {
    Kind kind;
    HalfInt first_kappa, second, kappa;
    std::vector<std::map<TensorState::Key, Real>> by_mu;  // index mu - kappa - 1
    Real at(HalfInt w1, HalfInt w2) const;
};

enum class OracleMethod { projection, kernel };

CoupledColumn coupled_column(OracleMethod method, Kind kind, HalfInt first_kappa, HalfInt second, HalfInt kappa,
                             HalfInt mu_max, const QContext& ctx);

struct CGPosLabel;
struct CGMixedLabel;

Real cg_oracle(const CGPosLabel& label, const QContext& ctx);
Real cg_oracle(const CGMixedLabel& label, const QContext& ctx);
Real cg_oracle_kernel(const CGPosLabel& label, const QContext& ctx);
Real cg_oracle_kernel(const CGMixedLabel& label, const QContext& ctx);

// Dimension of the kernel of the coupled lowering operator on the weight-(kappa+1) space.
int lowering_kernel_dimension(Kind kind, HalfInt first_kappa, HalfInt second, HalfInt kappa, const QContext& ctx);

// Dense matrix of a coupled generator between two weight spaces (rows: target basis).
struct WeightBlock {
    std::vector<TensorState::Key> rows, cols;
    std::vector<std::vector<Real>> m;
};
std::vector<TensorState::Key> weight_basis(Kind kind, HalfInt first_kappa, HalfInt second, HalfInt weight);
WeightBlock generator_block(Sign sign, Kind kind, HalfInt first_kappa, HalfInt second, HalfInt weight,
                            const QArith& A);

}  // namespace suq
