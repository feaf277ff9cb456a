#include "doctest.h"
#include "reference.hpp"

#include "suq/qhahn.hpp"
#include "suq/verify.hpp"

#include "json.hpp"

#include <fstream>
#include <random>

#ifndef SUQ_GOLDEN_DIR
#define SUQ_GOLDEN_DIR "tests/golden"
#endif

using namespace suq;

namespace {

const QContext half("0.5", 50);
Real tol(int slack) { return pow(Real(10), -(50 - slack)); }
Real xh(const Real& q, const Real& s) { return (pow(q, 2 * s) - 1) / (q * q - 1); }
Real xd(const Real& q, const Real& s) { return ref::qnum(q, s) * ref::qnum(q, s + 1); }

// Leading coefficient of the interpolant through (x_i, y_i).
Real leading(std::vector<Real> x, std::vector<Real> y) {
    const std::size_t n = y.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) y[i] = (y[i] - y[i - 1]) / (x[i] - x[i - k]);
    return y.back();
}

}  // namespace

TEST_CASE("degree zero is 1") {
    PrecisionScope p(70);
    for (int s = 0; s < 5; ++s) {
        CHECK(abs(hahn_eval(HahnSpec{0, 5, 1, 2}, s, half) - 1) < tol(5));
        CHECK(abs(hahn_eval(HahnSpec{0, 5, 1, -2}, s, half) - 1) < tol(5));
        CHECK(abs(dual_hahn_eval(DualHahnSpec{0, 0, 5, 0}, s, half) - 1) < tol(5));
    }
}

TEST_CASE("monic in the lattice variable") {
    PrecisionScope p(70);
    const Real q("0.5");
    for (int n = 1; n <= 5; ++n) {
        HahnSpec h{n, 8, 2, 1};
        DualHahnSpec d{n, Rat(1, 2), Rat(17, 2), Rat(1, 2)};
        std::vector<Real> x, y, xs, ys;
        for (int s = 0; s <= n; ++s) {
            x.push_back(xh(q, Real(s)));
            y.push_back(hahn_eval(h, s, half));
            Rat sd = d.a + s;
            xs.push_back(xd(q, Real(sd.numerator()) / sd.denominator()));
            ys.push_back(dual_hahn_eval(d, sd, half));
        }
        CHECK(abs(leading(x, y) - 1) < tol(15));
        CHECK(abs(leading(xs, ys) - 1) < tol(15));
    }
}

TEST_CASE("first-degree polynomial is x minus the weighted mean") {
    PrecisionScope p(70);
    const Real q("0.5");
    for (int N : {3, 6}) {
        HahnSpec h{1, N, 2, 1};
        Real num = 0, den = 0;
        for (int s = 0; s < N; ++s) {
            Real w = hahn_weight(h, s, half) * pow(q, Real(2 * s - 1));
            num += w * xh(q, Real(s));
            den += w;
        }
        for (int s = 0; s < N; ++s) CHECK(abs(hahn_eval(h, s, half) - (xh(q, Real(s)) - num / den)) < tol(12));
        DualHahnSpec d{1, 0, N, 0};
        num = den = 0;
        for (int s = 0; s < N; ++s) {
            Real w = dual_weight(d, s, half) * ref::qnum(q, Real(2 * s + 1));
            num += w * xd(q, Real(s));
            den += w;
        }
        for (int s = 0; s < N; ++s) CHECK(abs(dual_hahn_eval(d, s, half) - (xd(q, Real(s)) - num / den)) < tol(12));
    }
}

TEST_CASE("weights and norms") {
    PrecisionScope p(70);
    const Real q("0.5");
    HahnSpec h{0, 6, 2, 3};
    Real rho0 = ref::qfact(q, 3) * ref::qfact(q, 6 + 2 - 1) / ref::qfact(q, 5);
    CHECK(abs(hahn_weight(h, 0, half) - rho0) < tol(10) * rho0);
    Real d0 = 0;
    for (int s = 0; s < 6; ++s) d0 += hahn_weight(h, s, half) * pow(q, Real(2 * s - 1));
    CHECK(abs(d0 - hahn_norm2(h, half)) < tol(12) * d0);
    DualHahnSpec d{0, 0, 5, 0};
    for (int s = 0; s < 5; ++s) CHECK(dual_weight(d, s, half) > 0);
    for (int n = 0; n < 5; ++n)
        for (int m = 0; m < 5; ++m) {
            DualHahnSpec dn{n, 0, 5, 0};
            Real ip = dual_inner(dn, m, half);
            Real want = n == m ? dual_norm2(dn, half) : Real(0);
            CHECK(abs(ip - want) < tol(12) * dual_norm2(dn, half));
        }
}

TEST_CASE("orthogonality flags") {
    CHECK(HahnSpec{1, 4, 0, 0}.orthogonal());
    CHECK_FALSE(HahnSpec{1, 4, 0, -2}.orthogonal());
    CHECK(DualHahnSpec{1, 0, 4, 0}.orthogonal());
    CHECK_FALSE(DualHahnSpec{1, 0, 4, 3}.orthogonal());
    CHECK_THROWS_AS(HahnSpec({4, 4, 0, 0}).validate(), DomainError);
}

TEST_CASE("table data") {
    PrecisionScope p(70);
    Table1 h0 = table1_data(HahnSpec{0, 5, 1, 2}, 2, half);
    Table1 d0 = table1_data(DualHahnSpec{0, 1, 6, Rat(1, 2)}, 2, half);
    CHECK(h0.lambda_n == 0);
    CHECK(d0.lambda_n == 0);
    for (int s = 0; s < 5; ++s) {
        Table1 t = table1_data(HahnSpec{2, 5, 1, 2}, s, half);
        CHECK(abs(t.B + t.A + t.C) < tol(10) * (abs(t.A) + abs(t.C)));
    }
    CHECK(table1_data(DualHahnSpec{2, 1, 6, Rat(1, 2)}, 1, half).sigma == 0);
}

TEST_CASE("identity residuals") {
    PrecisionScope p(70);
    for (Identity id : {Identity::diffeq, Identity::ttrr, Identity::lowering, Identity::raising})
        for (int n = 0; n <= 4; ++n)
            for (int s = 0; s < 6; ++s) {
                CHECK(residual(id, HahnSpec{n, 6, 1, 2}, s, half) < tol(12));
                CHECK(residual(id, DualHahnSpec{n, Rat(1, 2), Rat(13, 2), 0}, Rat(2 * s + 1, 2), half) < tol(12));
            }
    // parameters of the mixed connection, outside the orthogonality region
    for (Identity id : {Identity::diffeq, Identity::ttrr, Identity::lowering, Identity::raising})
        for (int n = 0; n < 2; ++n)
            for (int s = 0; s < 3; ++s) CHECK(residual(id, HahnSpec{n, 3, 5, -2}, s, half) < tol(12));
    CHECK(residual(Identity::diffeq, HahnSpec{0, 6, 1, 2}, 3, half) == 0);
}

TEST_CASE("connections reproduce the coefficients") {
    PrecisionScope p(70);
    CGPosLabel norm{HalfInt(1), HalfInt(2), HalfInt(0), HalfInt(1), HalfInt(2), HalfInt(3)};
    CHECK(abs(cg_from_polynomials(Connection::pos_hahn, norm, half) - 1) < tol(12));
    CHECK(abs(cg_from_polynomials(Connection::pos_dual, norm, half) - 1) < tol(12));
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        CGPosLabel l = random_pos_label(rng, 10);
        Real v = cg_pos(l, CGMethod::sum_fwd, half);
        CHECK(rel_diff(cg_from_polynomials(Connection::pos_hahn, l, half), v) < tol(12));
        CHECK(rel_diff(cg_from_polynomials(Connection::pos_dual, l, half), v) < tol(12));
        CGMixedLabel m = random_mixed_label(rng, 10);
        Real w = cg_mixed(m, CGMethod::sum_fwd, half);
        CHECK(rel_diff(cg_from_polynomials(Connection::mixed_hahn, m, half), w) < tol(12));
        CHECK(rel_diff(cg_from_polynomials(Connection::mixed_dual, m, half), w) < tol(12));
    }
    CHECK_THROWS_AS(cg_from_polynomials(Connection::mixed_hahn, norm, half), DomainError);
}

TEST_CASE("dual connection sign matches the frozen golden table") {
    PrecisionScope p(70);
    std::ifstream in(SUQ_GOLDEN_DIR "/q_hahn2_sign.json");
    REQUIRE(in.good());
    const auto g = nlohmann::json::parse(in);
    REQUIRE(g.at("cases").size() >= 40);
    const QContext ctx(g.at("q").get<std::string>(), 50);
    for (const auto& c : g.at("cases")) {
        auto t = c.at("labels").get<std::vector<int>>();
        CGPosLabel l{HalfInt::from_twice(t[0]), HalfInt::from_twice(t[1]), HalfInt::from_twice(t[2]),
                     HalfInt::from_twice(t[3]), HalfInt::from_twice(t[4]), HalfInt::from_twice(t[5])};
        CHECK(pos_dual_sign(l) == c.at("sign").get<int>());
        CHECK(rel_diff(cg_from_polynomials(Connection::pos_dual, l, ctx), cg_pos(l, CGMethod::hyp_b, ctx)) < tol(12));
    }
}
