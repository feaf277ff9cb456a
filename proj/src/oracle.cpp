#include "suq/oracle.hpp"

#include "suq/cgc.hpp"

#include <cmath>

namespace suq {

TensorState::TensorState(Kind kind, HalfInt first_kappa, HalfInt second, HalfInt mu_cut)
    : kind_(kind), k1_(first_kappa), k2_(second), cut_(mu_cut) {}

void TensorState::add(Key key, const Real& v, const Real& scale) {
    auto& e = amp_[key];
    e.value += v;
    e.scale += scale;
}

Real TensorState::amplitude(HalfInt w1, HalfInt w2) const {
    auto it = amp_.find({w1.twice(), w2.twice()});
    return it == amp_.end() ? Real(0) : it->second.value;
}

Sum TensorState::component(Key key) const {
    auto it = amp_.find(key);
    return it == amp_.end() ? Sum{} : it->second;
}

Real TensorState::norm2() const {
    Real s(0);
    for (const auto& [k, e] : amp_) s += e.value * e.value;
    return s;
}

bool TensorState::empty() const {
    for (const auto& [k, e] : amp_)
        if (e.value != 0) return false;
    return true;
}

bool TensorState::admissible(Key key) const {
    auto [t1, t2] = key;
    if (t1 < k1_.twice() + 2 || (t1 - k1_.twice()) % 2) return false;
    if (kind_ == Kind::pos_pos) return t2 >= k2_.twice() + 2 && (t2 - k2_.twice()) % 2 == 0;
    return t2 <= k2_.twice() && t2 >= -k2_.twice() && (k2_.twice() - t2) % 2 == 0;
}

void TensorState::scale_by(const Real& c) {
    Real ac = abs(c);
    for (auto& [k, e] : amp_) {
        e.value *= c;
        e.scale *= ac;
    }
}

void TensorState::accumulate(const TensorState& o, const Real& c) {
    Real ac = abs(c);
    for (const auto& [k, e] : o.amp_) add(k, c * e.value, ac * e.scale);
    if (o.tainted_) tainted_ = true;
}

TensorState apply_coupled(Sign sign, const TensorState& state, const QArith& A) {
    TensorState out = state.zero_like();
    if (state.tainted()) out.mark_tainted();
    const int d = 2 * sgn(sign);
    for (const auto& [key, e] : state.entries()) {
        if (e.value == 0 && e.scale == 0) continue;
        HalfInt a = HalfInt::from_twice(key.first), b = HalfInt::from_twice(key.second);
        if (sign == Sign::plus && key.first + key.second + 2 > state.mu_cut().twice()) {
            out.mark_tainted();
            continue;
        }
        Real c1 = kpm_coeff(A, sign, state.first_kappa(), a) * A.pow(R(b));
        if (c1 != 0) out.add({key.first + d, key.second}, c1 * e.value, abs(c1) * e.scale);
        Real c2 = state.kind() == Kind::pos_pos ? kpm_coeff(A, sign, state.second(), b)
                                                : jpm_coeff(A, sign, state.second(), b) * sgn(sign);
        c2 *= A.pow(-R(a));
        if (c2 != 0) out.add({key.first, key.second + d}, c2 * e.value, abs(c2) * e.scale);
    }
    return out;
}

TensorState apply_coupled(Sign sign, const TensorState& state, const QContext& ctx) {
    PrecisionScope scope(ctx.digits());
    return apply_coupled(sign, state, arith(ctx.q(), ctx.digits()));
}

namespace {

TensorState apply_n(Sign sign, TensorState st, int n, const QArith& A) {
    for (int i = 0; i < n; ++i) st = apply_coupled(sign, st, A);
    return st;
}

void require_weight(const TensorState& st, HalfInt w) {
    for (const auto& [key, e] : st.entries())
        if (key.first + key.second != w.twice())
            throw DomainError("state does not have sharp total weight " + w.str());
}

Real norm_factor(const QArith& A, HalfInt kappa, HalfInt mu) {
    Rat k = R(kappa), m = R(mu);
    return A.sqrt(A.fact(2 * k + 1) / (A.fact(m + k) * A.fact(m - k - 1)));
}

}  // namespace

TensorState project_minimal(HalfInt kappa, const TensorState& state, const QArith& A) {
    require_weight(state, kappa + 1);
    TensorState out = state.zero_like();
    TensorState cur = state;
    const int two_k = kappa.twice();
    for (int r = 0; r <= two_k; ++r) {
        if (r > 0) cur = apply_coupled(Sign::minus, cur, A);
        if (cur.empty()) break;
        Real c = A.fact(Rat(two_k - r)) / (A.fact(Rat(r)) * A.fact(Rat(two_k)));
        if (r % 2) c = -c;
        out.accumulate(apply_n(Sign::plus, cur, r, A), c);
    }
    return out;
}

TensorState project_minimal(HalfInt kappa, const TensorState& state, const QContext& ctx) {
    PrecisionScope scope(ctx.digits());
    return project_minimal(kappa, state, arith(ctx.q(), ctx.digits()));
}

void ProjectionSpec::validate() const {
    if (kappa_target.twice() < 0) throw DomainError("kappa must be >= 0");
    if (mu_target < kappa_target + 1 || mu_bar < kappa_target + 1)
        throw DomainError("projection weights must be >= kappa + 1");
    if (!(mu_target - kappa_target).is_integer() || !(mu_bar - kappa_target).is_integer())
        throw DomainError("projection weights must differ from kappa by integers");
}

TensorState project_general(const ProjectionSpec& spec, const TensorState& state, const QArith& A) {
    spec.validate();
    require_weight(state, spec.mu_bar);
    const HalfInt k = spec.kappa_target;
    TensorState st = apply_n(Sign::minus, state, (spec.mu_bar - k - 1).to_int(), A);
    st.scale_by(norm_factor(A, k, spec.mu_bar));
    st = project_minimal(k, st, A);
    st = apply_n(Sign::plus, st, (spec.mu_target - k - 1).to_int(), A);
    st.scale_by(norm_factor(A, k, spec.mu_target));
    return st;
}

Real CoupledColumn::at(HalfInt w1, HalfInt w2) const {
    HalfInt mu = w1 + w2;
    int idx = (mu - kappa - 1).to_int();
    if (idx < 0 || idx >= static_cast<int>(by_mu.size()))
        throw DomainError("coupled column does not reach weight " + mu.str());
    auto it = by_mu[idx].find({w1.twice(), w2.twice()});
    return it == by_mu[idx].end() ? Real(0) : it->second;
}

// ---- dense helpers ----

std::vector<TensorState::Key> weight_basis(Kind kind, HalfInt k1, HalfInt second, HalfInt weight) {
    std::vector<TensorState::Key> basis;
    TensorState probe(kind, k1, second, weight);
    for (int t1 = k1.twice() + 2; t1 <= weight.twice() + 2 * second.twice() + 2; t1 += 2) {
        TensorState::Key key{t1, weight.twice() - t1};
        if (probe.admissible(key)) basis.push_back(key);
    }
    return basis;
}

WeightBlock generator_block(Sign sign, Kind kind, HalfInt k1, HalfInt second, HalfInt weight, const QArith& A) {
    WeightBlock b;
    b.cols = weight_basis(kind, k1, second, weight);
    b.rows = weight_basis(kind, k1, second, weight + HalfInt(sgn(sign)));
    b.m.assign(b.rows.size(), std::vector<Real>(b.cols.size(), Real(0)));
    for (std::size_t c = 0; c < b.cols.size(); ++c) {
        TensorState st(kind, k1, second, weight + 2);
        st.add(b.cols[c], Real(1), Real(1));
        TensorState img = apply_coupled(sign, st, A);
        for (std::size_t r = 0; r < b.rows.size(); ++r) b.m[r][c] = img.component(b.rows[r]).value;
    }
    return b;
}

namespace {

using Matrix = std::vector<std::vector<Real>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m, std::size_t ncols, const Real& tol) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < m.size(); ++c) {
        std::size_t best = row;
        for (std::size_t r = row + 1; r < m.size(); ++r)
            if (abs(m[r][c]) > abs(m[best][c])) best = r;
        if (abs(m[best][c]) <= tol) continue;
        std::swap(m[row], m[best]);
        Real p = m[row][c];
        for (auto& x : m[row]) x /= p;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            Real f = m[r][c];
            for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(static_cast<int>(c));
        ++row;
    }
    return pivots;
}

Real max_abs(const Matrix& m) {
    Real best(0);
    for (const auto& row : m)
        for (const auto& x : row) best = std::max(best, Real(abs(x)));
    return best;
}

Real tolerance(const Matrix& m, int digits) {
    Real scale = max_abs(m);
    if (scale == 0) scale = 1;
    return scale * pow(Real(10), -digits / 2);
}

// Scales rows, then the first ncols columns, to unit max-norm; returns the column divisors.
// Ladder entries span many orders of magnitude away from q = 1, which defeats a single rank tolerance.
std::vector<Real> equilibrate(Matrix& m, std::size_t ncols) {
    for (auto& row : m) {
        Real top(0);
        for (std::size_t c = 0; c < ncols; ++c) top = std::max(top, Real(abs(row[c])));
        if (top != 0)
            for (auto& x : row) x /= top;
    }
    std::vector<Real> div(ncols, Real(1));
    for (std::size_t c = 0; c < ncols; ++c) {
        Real top(0);
        for (const auto& row : m) top = std::max(top, Real(abs(row[c])));
        if (top == 0) continue;
        div[c] = top;
        for (auto& row : m) row[c] /= top;
    }
    return div;
}

// Kernel basis vectors of m (ncols unknowns).
std::vector<std::vector<Real>> kernel(Matrix m, std::size_t ncols, int digits) {
    const std::vector<Real> div = equilibrate(m, ncols);
    Real tol = tolerance(m, digits);
    auto piv = rref(m, ncols, tol);
    std::vector<bool> is_piv(ncols, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<std::vector<Real>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Real> v(ncols, Real(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
        for (std::size_t c = 0; c < ncols; ++c) v[c] /= div[c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

int lowering_kernel_dimension(Kind kind, HalfInt k1, HalfInt second, HalfInt kappa, const QContext& ctx) {
    int work = ctx.digits() + 40;
    PrecisionScope scope(work);
    const QArith& A = arith(ctx.q(), work);
    WeightBlock b = generator_block(Sign::minus, kind, k1, second, kappa + 1, A);
    if (b.cols.empty()) return 0;
    return static_cast<int>(kernel(b.m, b.cols.size(), work).size());
}

namespace {

TensorState seed_state(Kind kind, HalfInt k1, HalfInt second, HalfInt kappa, HalfInt mu_max) {
    TensorState seed(kind, k1, second, mu_max);
    TensorState::Key key{(k1 + 1).twice(), (kappa - k1).twice()};
    if (!seed.admissible(key))
        throw DomainError("seed pair (" + (k1 + 1).str() + ", " + (kappa - k1).str() +
                          ") is outside the product space");
    seed.add(key, Real(1), Real(1));
    return seed;
}

// Minimal weight vector normalized as P|seed>/sqrt(<seed|P|seed>).
TensorState minimal_by_projection(Kind kind, HalfInt k1, HalfInt second, HalfInt kappa, HalfInt mu_max,
                                  const QArith& A) {
    TensorState seed = seed_state(kind, k1, second, kappa, mu_max);
    TensorState p = project_minimal(kappa, seed, A);
    Sum den = p.component(seed.entries().begin()->first);
    if (den.value <= 0) throw DomainError("projection of the seed vanishes: label outside the decomposition");
    Real inv = 1 / A.sqrt(den.value);
    TensorState out = p.zero_like();
    // fold the denominator's own cancellation into every component's scale
    Real rel = den.scale / den.value;
    for (const auto& [k, e] : p.entries()) out.add(k, e.value * inv, (e.scale + abs(e.value) * rel) * inv);
    return out;
}

struct PrecisionShortfall {};

// seed = a v0 + K+ u; the minimal vector is a v0 / sqrt(a <seed|v0>).
TensorState minimal_by_kernel(Kind kind, HalfInt k1, HalfInt second, HalfInt kappa, HalfInt mu_max,
                              const QArith& A) {
    TensorState seed = seed_state(kind, k1, second, kappa, mu_max);
    auto seed_key = seed.entries().begin()->first;
    WeightBlock low = generator_block(Sign::minus, kind, k1, second, kappa + 1, A);
    auto ker = kernel(low.m, low.cols.size(), A.digits());
    if (ker.size() != 1)
        throw DomainError("lowering kernel has dimension " + std::to_string(ker.size()) + ", expected 1");
    const auto& v0 = ker[0];
    const auto& basis = low.cols;
    const std::size_t d = basis.size();
    WeightBlock up = generator_block(Sign::plus, kind, k1, second, kappa, A);  // W(kappa) -> W(kappa+1)
    if (up.rows != basis) throw std::logic_error("weight basis mismatch");
    Matrix sys(d, std::vector<Real>(1 + up.cols.size() + 1, Real(0)));
    std::size_t seed_idx = d;
    for (std::size_t r = 0; r < d; ++r) {
        sys[r][0] = v0[r];
        for (std::size_t c = 0; c < up.cols.size(); ++c) sys[r][1 + c] = up.m[r][c];
        if (basis[r] == seed_key) {
            sys[r].back() = 1;
            seed_idx = r;
        }
    }
    const std::size_t n = 1 + up.cols.size();
    const std::vector<Real> div = equilibrate(sys, n);
    const Real tol = tolerance(sys, A.digits());
    auto piv = rref(sys, n, tol);
    // K+ may have a kernel on W(kappa) when j > kappa; only the v0 coefficient must be unique
    if (piv.empty() || piv[0] != 0) throw DomainError("seed decomposition is singular");
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    bool unique = true;
    for (std::size_t c = 1; c < n; ++c)
        if (!is_piv[c] && abs(sys[0][c]) > tol) unique = false;
    if (!unique) {
        // v0 lies in the image of K+: normalize with the invariant metric, (-1)^{j-m} on the finite factor.
        // The metric sum cancels heavily for large j; its loss is carried into the component scales.
        Sum g;
        for (std::size_t r = 0; r < d; ++r) {
            const bool odd = kind == Kind::mixed && ((second.twice() - basis[r].second) / 2) % 2 != 0;
            g.add(odd ? Real(-v0[r] * v0[r]) : Real(v0[r] * v0[r]));
        }
        if (v0[seed_idx] == 0) throw DomainError("seed has no component along the minimal vector");
        if (abs(g.value) <= g.scale * pow(Real(10), -A.digits() + 5)) throw PrecisionShortfall();
        Real c = (v0[seed_idx] > 0 ? 1 : -1) / A.sqrt(abs(g.value));
        Real rel = g.scale / abs(g.value);
        TensorState out = seed.zero_like();
        for (std::size_t r = 0; r < d; ++r)
            if (v0[r] != 0) out.add(basis[r], c * v0[r], abs(c * v0[r]) * rel);
        return out;
    }
    for (std::size_t r = piv.size(); r < d; ++r)
        if (abs(sys[r].back()) > tol) throw DomainError("seed decomposition is inconsistent");
    Real a = sys[0].back() / div[0];
    Real norm2 = a * v0[seed_idx];
    if (norm2 <= 0) throw DomainError("seed has no component along the minimal vector");
    Real c = a / A.sqrt(norm2);
    TensorState out = seed.zero_like();
    for (std::size_t r = 0; r < d; ++r)
        if (v0[r] != 0) out.add(basis[r], c * v0[r], abs(c * v0[r]));
    return out;
}

struct ColumnResult {
    CoupledColumn col;
    double loss = 0;
};

ColumnResult build_column(OracleMethod method, Kind kind, HalfInt k1, HalfInt second, HalfInt kappa,
                          HalfInt mu_max, const QArith& A, int target_digits) {
    TensorState v = method == OracleMethod::projection ? minimal_by_projection(kind, k1, second, kappa, mu_max, A)
                                                       : minimal_by_kernel(kind, k1, second, kappa, mu_max, A);
    ColumnResult res{CoupledColumn{kind, k1, second, kappa, {}}, 0.0};
    const int steps = (mu_max - kappa - 1).to_int();
    for (int i = 0; i <= steps; ++i) {
        HalfInt mu = kappa + 1 + HalfInt(i);
        if (i > 0) v = apply_coupled(Sign::plus, v, A);
        if (v.tainted()) throw TruncationError("truncation reached while raising; increase mu_cut");
        Real nf = norm_factor(A, kappa, mu);
        Real peak(0);
        for (const auto& [k, e] : v.entries()) peak = std::max(peak, Real(abs(e.value)));
        std::map<TensorState::Key, Real> vec;
        for (const auto& [k, e] : v.entries()) {
            vec[k] = nf * e.value;
            if (abs(e.value) <= peak * pow(Real(10), -target_digits)) continue;
            double loss = cancellation_digits(Sum{e.value, e.scale});
            res.loss = std::max(res.loss, loss);
        }
        res.col.by_mu.push_back(std::move(vec));
    }
    return res;
}

}  // namespace

CoupledColumn coupled_column(OracleMethod method, Kind kind, HalfInt k1, HalfInt second, HalfInt kappa,
                             HalfInt mu_max, const QContext& ctx) {
    if (mu_max < kappa + 1) throw DomainError("mu_max must be >= kappa + 1");
    int guard = method == OracleMethod::kernel ? 40 : 20;
    for (int attempt = 0;; ++attempt) {
        int work = ctx.digits() + guard;
        PrecisionScope scope(work);
        ColumnResult r;
        try {
            r = build_column(method, kind, k1, second, kappa, mu_max, arith(ctx.q(), work), ctx.digits());
        } catch (const PrecisionShortfall&) {
            if (attempt == 3) throw DomainError("oracle normalization lost all digits");
            guard *= 2;
            continue;
        }
        if (r.loss <= guard - 5 || attempt == 3) return r.col;
        guard = static_cast<int>(r.loss) + 25;
    }
}

Real cg_oracle(const CGPosLabel& label, const QContext& ctx) {
    label.validate();
    if (!label.admissible()) return Real(0);
    auto col = coupled_column(OracleMethod::projection, Kind::pos_pos, label.kappa1, label.kappa2, label.kappa,
                              label.mu, ctx);
    return col.at(label.mu1, label.mu2);
}

Real cg_oracle(const CGMixedLabel& label, const QContext& ctx) {
    label.validate();
    if (!label.admissible()) return Real(0);
    auto col = coupled_column(OracleMethod::projection, Kind::mixed, label.kappa, label.j, label.kappa_p,
                              label.mu_p, ctx);
    return col.at(label.mu, label.m);
}

Real cg_oracle_kernel(const CGPosLabel& label, const QContext& ctx) {
    label.validate();
    if (!label.admissible()) return Real(0);
    auto col = coupled_column(OracleMethod::kernel, Kind::pos_pos, label.kappa1, label.kappa2, label.kappa,
                              label.mu, ctx);
    return col.at(label.mu1, label.mu2);
}

Real cg_oracle_kernel(const CGMixedLabel& label, const QContext& ctx) {
    label.validate();
    if (!label.admissible()) return Real(0);
    auto col = coupled_column(OracleMethod::kernel, Kind::mixed, label.kappa, label.j, label.kappa_p,
                              label.mu_p, ctx);
    return col.at(label.mu, label.m);
}

}  // namespace suq
