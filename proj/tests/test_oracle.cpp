#include "doctest.h"
#include "reference.hpp"

#include "suq/cgc.hpp"
#include "suq/oracle.hpp"

#include <random>

using namespace suq;

namespace {

const QContext half("0.5", 50);
HalfInt H(int twice) { return HalfInt::from_twice(twice); }
Real tol(int slack = 15) { return pow(Real(10), -(50 - slack)); }

Real max_abs(const TensorState& s) {
    Real m = 0;
    for (const auto& [k, e] : s.entries()) m = std::max(m, Real(abs(e.value)));
    return m;
}

Real diff(const TensorState& a, const TensorState& b) {
    TensorState d = a;
    d.accumulate(b, Real(-1));
    return max_abs(d);
}

// Random state in D^{k1} (x) D^{k2} with total weight w.
TensorState random_state(std::mt19937_64& rng, HalfInt k1, HalfInt k2, HalfInt w, HalfInt cut) {
    TensorState s(Kind::pos_pos, k1, k2, cut);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (HalfInt m1 = k1 + 1; w - m1 >= k2 + 1; m1 += 1) s.add(m1, w - m1, Real(coef(rng)) / 7);
    return s;
}

}  // namespace

TEST_CASE("coupled generators") {
    PrecisionScope p(70);
    TensorState zero(Kind::pos_pos, H(0), H(1), H(20));
    CHECK(apply_coupled(Sign::plus, zero, half).empty());
    CHECK(apply_coupled(Sign::minus, zero, half).empty());

    SUBCASE("mixed lowering from the minimal pair keeps a single term") {
        // K'-(12) on |kappa kappa+1>|j m>: only the J- part survives, with sign -1 and q^{-(kappa+1)}
        const HalfInt k = H(2), j = H(2);
        TensorState s(Kind::mixed, k, j, H(20));
        s.add(k + 1, H(0), Real(1));
        TensorState out = apply_coupled(Sign::minus, s, half);
        REQUIRE(out.entries().size() == 1);
        const Real q("0.5");
        Real want = -pow(q, -Real(2)) * sqrt(ref::qnum(q, Real(1)) * ref::qnum(q, Real(2)));
        CHECK(abs(out.amplitude(k + 1, H(-2)) - want) < tol(5));
    }

    SUBCASE("commutator [K+,K-] = -[2K0]") {
        std::mt19937_64 rng(7);
        const Real q("0.5");
        for (int t = 0; t < 6; ++t) {
            HalfInt k1 = H(t % 3), k2 = H(t / 2), w = k1 + k2 + 2 + H(2 * t);
            TensorState s = random_state(rng, k1, k2, w, w + 4);
            TensorState a = apply_coupled(Sign::plus, apply_coupled(Sign::minus, s, half), half);
            TensorState b = apply_coupled(Sign::minus, apply_coupled(Sign::plus, s, half), half);
            a.accumulate(b, Real(-1));
            a.accumulate(s, ref::qnum(q, Real(w.twice())));
            CHECK(max_abs(a) < tol() * (1 + max_abs(s)) * ref::qnum(q, Real(w.twice())));
        }
    }
}

TEST_CASE("minimal-weight projector") {
    PrecisionScope p(70);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
        HalfInt k1 = H(t), k2 = H(1 + t % 2), k = k1 + k2 + 1 + H(2 * (t % 3));
        TensorState s = random_state(rng, k1, k2, k + 1, k + 6);
        TensorState once = project_minimal(k, s, half);
        TensorState twice = project_minimal(k, once, half);
        const Real scale = 1 + max_abs(once);
        CHECK(diff(once, twice) < tol() * scale);
        CHECK(max_abs(apply_coupled(Sign::minus, once, half)) < tol() * scale);
    }
    TensorState wrong(Kind::pos_pos, H(0), H(0), H(10));
    wrong.add(H(2), H(2), Real(1));
    wrong.add(H(4), H(2), Real(1));
    CHECK_THROWS_AS(project_minimal(H(1), wrong, half), DomainError);
}

TEST_CASE("projection oracle against the reference recursion") {
    PrecisionScope p(70);
    const Real q("0.5");
    CHECK(abs(cg_oracle(CGPosLabel{H(0), H(2), H(0), H(2), H(2), H(4)}, half) - 1) < tol());
    for (int t1 = 0; t1 <= 3; ++t1)
        for (int t2 = 0; t2 <= 3; ++t2)
            for (int tk = t1 + t2 + 2; tk <= t1 + t2 + 6; tk += 2)
                for (int tm1 = t1 + 2; tm1 <= t1 + 8; tm1 += 2)
                    for (int tm2 = t2 + 2; tm2 <= t2 + 6; tm2 += 2) {
                        CGPosLabel l{H(t1), H(tm1), H(t2), H(tm2), H(tk), H(tm1 + tm2)};
                        if (!l.admissible()) continue;
                        Real want = ref::cg_pos(q, t1, tm1, t2, tm2, tk, tm1 + tm2);
                        CHECK(abs(cg_oracle(l, half) - want) < tol() * (1 + abs(want)));
                        CHECK(abs(cg_oracle_kernel(l, half) - want) < tol() * (1 + abs(want)));
                    }
}

TEST_CASE("golden oracle values") {
    PrecisionScope p(70);
    // <0 2, 0 1 | 1 3> at q = 1/2, fixed from the reference recursion (= 1/sqrt 17)
    const Real vstar("0.242535625036332973518906462116122177949835248551389437317567");
    CGPosLabel l{H(0), H(4), H(0), H(2), H(2), H(6)};
    CHECK(abs(cg_oracle(l, half) - vstar) < tol());
    CHECK(abs(cg_oracle_kernel(l, half) - vstar) < tol());
    CHECK(abs(vstar * vstar * 17 - 1) < tol(5));
    // <1 2, 1 0 | 1 2> at q = 1/2 (= sqrt 17)
    const Real wstar("4.12310562561766054982140985597407702514719922537362043439863");
    CGMixedLabel m{H(2), H(4), H(2), H(0), H(2), H(4)};
    CHECK(abs(cg_oracle(m, half) - wstar) < tol());
    CHECK(abs(cg_oracle_kernel(m, half) - wstar) < tol());
}

TEST_CASE("normalizations") {
    PrecisionScope p(70);
    for (int t1 = 0; t1 <= 4; ++t1)
        for (int t2 = 0; t2 <= 4; ++t2) {
            CGPosLabel l{H(t1), H(t1 + 2), H(t2), H(t2 + 2), H(t1 + t2 + 2), H(t1 + t2 + 4)};
            CHECK(abs(cg_oracle(l, half) - 1) < tol());
            CHECK(abs(cg_oracle_kernel(l, half) - 1) < tol());
        }
    for (int tk = 0; tk <= 4; ++tk)
        for (int tj = 0; tj <= tk; ++tj) {
            if ((tk - tj) % 2) continue;
            CGMixedLabel l{H(tk), H(tk + 2), H(tj), H(-tj), H(tk - tj), H(tk - tj + 2)};
            CHECK(abs(cg_oracle(l, half) - 1) < tol());
            CHECK(abs(cg_oracle_kernel(l, half) - 1) < tol());
        }
}

TEST_CASE("mixed coupling range from the lowering kernel") {
    PrecisionScope p(70);
    for (int tk = 0; tk <= 4; ++tk)
        for (int tj = 0; tj <= 4; ++tj)
            for (int tkp = (tk + tj) % 2; tkp <= tk + tj + 4; tkp += 2) {
                const bool in_range = tkp >= std::abs(tk - tj) && tkp <= tk + tj;
                const int dim = lowering_kernel_dimension(Kind::mixed, H(tk), H(tj), H(tkp), half);
                if (in_range)
                    CHECK(dim >= 1);
                else if (tkp > tk + tj)
                    CHECK(dim == 0);
            }
}

TEST_CASE("oracle output does not depend on truncation") {
    PrecisionScope p(70);
    const HalfInt k1 = H(1), k2 = H(2), k = H(5);
    CoupledColumn a = coupled_column(OracleMethod::projection, Kind::pos_pos, k1, k2, k, H(9), half);
    CoupledColumn b = coupled_column(OracleMethod::projection, Kind::pos_pos, k1, k2, k, H(13), half);
    for (HalfInt m1 = k1 + 1; m1 <= H(9) - k2 - 1; m1 += 1) CHECK(abs(a.at(m1, H(9) - m1) - b.at(m1, H(9) - m1)) < tol());
}

TEST_CASE("labels outside the selection rules") {
    PrecisionScope p(70);
    CGPosLabel bad{H(0), H(2), H(0), H(2), H(0), H(4)};
    CHECK_FALSE(bad.admissible());
    CGMixedLabel far{H(2), H(4), H(2), H(0), H(10), H(4)};
    CHECK_FALSE(far.admissible());
}
