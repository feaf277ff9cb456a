// Reference values computed without the library's q-arithmetic: q-numbers are
// evaluated straight from their definition and Clebsch-Gordan coefficients of
// two positive discrete series come from an explicit lowest-weight recursion.
#pragma once

#include "suq/qcore.hpp"

#include <map>
#include <utility>

namespace ref {

using suq::Real;

inline Real qnum(const Real& q, const Real& x) { return (pow(q, x) - pow(q, -x)) / (q - 1 / q); }

inline Real qfact(const Real& q, int n) {
    Real r = 1;
    for (int i = 2; i <= n; ++i) r *= qnum(q, Real(i));
    return r;
}

// Keys are twice-values (mu1, mu2).
using Vec = std::map<std::pair<int, int>, Real>;

inline Real lower(const Real& q, int tk, int tmu) {  // <mu-1|K-|mu>, twice units
    Real k = Real(tk) / 2, mu = Real(tmu) / 2;
    return sqrt(qnum(q, mu + k) * qnum(q, mu - k - 1));
}
inline Real raise(const Real& q, int tk, int tmu) {  // <mu+1|K+|mu>
    Real k = Real(tk) / 2, mu = Real(tmu) / 2;
    return sqrt(qnum(q, mu - k) * qnum(q, mu + k + 1));
}

// Coupled K+ = K+(1) q^{K0(2)} + q^{-K0(1)} K+(2).
inline Vec raise_coupled(const Real& q, int tk1, int tk2, const Vec& v) {
    Vec out;
    for (const auto& [key, a] : v) {
        auto [m1, m2] = key;
        out[{m1 + 2, m2}] += a * raise(q, tk1, m1) * pow(q, Real(m2) / 2);
        out[{m1, m2 + 2}] += a * raise(q, tk2, m2) * pow(q, -Real(m1) / 2);
    }
    return out;
}

// Column |kappa mu> in D^{kappa1} (x) D^{kappa2}, coefficient at mu1 = kappa1+1 positive.
inline Vec coupled_vector(const Real& q, int tk1, int tk2, int tk, int tmu) {
    Vec v;
    // kernel of the coupled K- on total weight kappa+1, solved from the top mu2 down
    int m1 = tk1 + 2, m2 = tk + 2 - m1;
    Real a = 1;
    v[{m1, m2}] = a;
    while (m2 - 2 >= tk2 + 2) {
        // K-(12) coefficient at (m1, m2-2): a_{m1,m2} q^{-m1/2} l2(m2) + a_{m1+2,m2-2} l1(m1+2) q^{(m2-2)/2} = 0
        a = -a * pow(q, -Real(m1) / 2) * lower(q, tk2, m2) / (lower(q, tk1, m1 + 2) * pow(q, Real(m2 - 2) / 2));
        m1 += 2;
        m2 -= 2;
        v[{m1, m2}] = a;
    }
    Real n2 = 0;
    for (const auto& [key, x] : v) n2 += x * x;
    for (auto& [key, x] : v) x /= sqrt(n2);
    for (int t = tk + 2; t < tmu; t += 2) {
        v = raise_coupled(q, tk1, tk2, v);
        const Real c = raise(q, tk, t);
        for (auto& [key, x] : v) x /= c;
    }
    return v;
}

inline Real cg_pos(const Real& q, int tk1, int tm1, int tk2, int tm2, int tk, int tmu) {
    if (tm1 + tm2 != tmu) return 0;
    Vec v = coupled_vector(q, tk1, tk2, tk, tmu);
    auto it = v.find({tm1, tm2});
    return it == v.end() ? Real(0) : it->second;
}

}  // namespace ref
