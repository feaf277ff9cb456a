#include "doctest.h"
#include "reference.hpp"

#include "suq/qcore.hpp"

using namespace suq;

namespace {

const QContext half("0.5", 50);

Real err(const Real& a, const Real& b) { return abs(a - b); }
const Real tight = pow(Real(10), -45);

}  // namespace

TEST_CASE("HalfInt parsing keeps exactness") {
    CHECK(HalfInt::parse("3").twice() == 6);
    CHECK(HalfInt::parse("-1/2").twice() == -1);
    CHECK(HalfInt::parse("5/2").twice() == 5);
    CHECK_THROWS_AS(HalfInt::parse("1.5"), DomainError);
    CHECK_THROWS_AS(HalfInt::parse("1/3"), DomainError);
    CHECK_THROWS_AS(HalfInt::parse(""), DomainError);
    CHECK(HalfInt::from_twice(3).str() == "3/2");
    CHECK((HalfInt::from_twice(3) + HalfInt::from_twice(1)).is_integer());
}

TEST_CASE("QContext validates q and digits") {
    CHECK_THROWS(QContext("1", 50));
    CHECK_THROWS(QContext("0", 50));
    CHECK_THROWS(QContext("-0.5", 50));
    CHECK_THROWS(QContext("0.5", 10));
    QContext inv = half.inverse();
    PrecisionScope p(50);
    CHECK(err(to_real(inv.q()), Real(2)) < tight);
}

TEST_CASE("qnum") {
    PrecisionScope p(60);
    CHECK(qnum(Rat(0), half) == 0);
    CHECK(err(qnum(Rat(1), half), Real(1)) < tight);
    CHECK(err(qnum(Rat(2), half), Real("2.5")) < tight);
    const Real q = Real("0.5");
    for (int t = -9; t <= 9; ++t) {
        Rat x(t, 2);
        CHECK(err(qnum(x, half), ref::qnum(q, Real(t) / 2)) < tight);
        CHECK(err(qnum(x, half), qnum(x, half.inverse())) < tight);
    }
}

TEST_CASE("qfact and its reciprocal") {
    PrecisionScope p(60);
    CHECK(qfact(0, half) == 1);
    CHECK(err(qfact(1, half), Real(1)) < tight);
    CHECK(err(qfact(3, half), Real("13.125")) < tight);
    CHECK_THROWS_AS(qfact(-1, half), DomainError);
    CHECK(qfact_recip(-1, half) == 0);
    CHECK(qfact_recip(-7, half) == 0);
    CHECK(err(qfact_recip(0, half), Real(1)) < tight);
    CHECK(err(qfact_recip(2, half), Real("0.4")) < tight);
    for (int n = 0; n <= 12; ++n) CHECK(err(qfact(n, half), ref::qfact(Real("0.5"), n)) / ref::qfact(Real("0.5"), n) < tight);
}

TEST_CASE("qpoch") {
    PrecisionScope p(60);
    CHECK(qpoch(Rat(7, 3), 0, half) == 1);
    CHECK(qpoch(Rat(-2), 3, half) == 0);
    CHECK(err(qpoch(Rat(1), 4, half), qfact(4, half)) < tight);
    // (a)_n (a+n)_m = (a)_{n+m}
    for (Rat a : {Rat(1, 2), Rat(-5, 2), Rat(3)})
        for (int n = 0; n <= 5; ++n)
            for (int m = 0; m <= 5; ++m) {
                Real lhs = qpoch(a, n, half) * qpoch(a + n, m, half);
                Real rhs = qpoch(a, n + m, half);
                CHECK(err(lhs, rhs) <= tight * (1 + abs(rhs)));
            }
}

TEST_CASE("qhyper terminating series") {
    PrecisionScope p(60);
    const Real q = Real("0.5");
    using ref::qfact;
    SUBCASE("zero upper parameter") {
        CHECK(err(qhyper({{Rat(0), Rat(3)}, {Rat(2)}, Real("0.7"), {}}, half), Real(1)) < tight);
    }
    SUBCASE("Chu-Vandermonde, b < c") {
        const int n = 1, b = 2, c = 3;
        Real want = qfact(q, c - n) * qfact(q, c - b) / (qfact(q, c) * qfact(q, c - b - n)) * pow(q, Real(b * n));
        Real got = qhyper({{Rat(-n), Rat(-b)}, {Rat(-c)}, Real(0), Rat(b - c + n - 1)}, half);
        CHECK(err(got, want) < tight);
    }
    SUBCASE("second summation formula") {
        const int n = 1, b = 1, c = 2;
        Real want = qfact(q, c - n) * qfact(q, b + c) / (qfact(q, c) * qfact(q, b + c - n)) * pow(q, Real(b * n));
        Real got = qhyper({{Rat(-n), Rat(b)}, {Rat(-c)}, Real(0), Rat(b + c - n + 1)}, half);
        CHECK(err(got, want) < tight);
        CHECK(err(got, Real("1.05")) < tight);
    }
    SUBCASE("pole before termination is reported") {
        try {
            qhyper({{Rat(-3), Rat(1)}, {Rat(-1)}, Real(1), {}}, half);
            FAIL("expected a pole");
        } catch (const PoleError& e) {
            CHECK(e.param_index == 0);
            CHECK(e.k >= 1);
        }
    }
    SUBCASE("non-terminating input is rejected") {
        CHECK_THROWS_AS(qhyper({{Rat(1), Rat(2)}, {Rat(3)}, Real(1), {}}, half), DomainError);
    }
}

TEST_CASE("format_real is stable") {
    PrecisionScope p(60);
    CHECK(format_real(Real("0.4"), 10) == format_real(Real("0.4"), 10));
    CHECK(format_real(Real(0), 20) == "0");
}
