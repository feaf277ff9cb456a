#include "doctest.h"
#include "reference.hpp"

#include "suq/reps.hpp"

using namespace suq;

namespace {

const QContext half("0.5", 50);
const Real tight = pow(Real(10), -45);
HalfInt H(int twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST_CASE("label validation") {
    CHECK(PosSeriesLabel{H(1), H(3)}.valid());
    CHECK_FALSE(PosSeriesLabel{H(1), H(1)}.valid());
    CHECK_FALSE(PosSeriesLabel{H(1), H(4)}.valid());
    CHECK_THROWS_AS(PosSeriesLabel({H(-2), H(2)}).validate(), DomainError);
    CHECK(FiniteRepLabel{H(2), H(-2)}.valid());
    CHECK_FALSE(FiniteRepLabel{H(2), H(4)}.valid());
    CHECK_FALSE(FiniteRepLabel{H(2), H(1)}.valid());
}

TEST_CASE("K0 eigenvalue") {
    PrecisionScope p(60);
    CHECK(k0_action({H(0), H(2)}) == 1);
    CHECK(k0_action({H(1), H(5)}) == Real("2.5"));
    CHECK(k0_action({H(2), H(6)}) == 3);
}

TEST_CASE("ladder actions") {
    PrecisionScope p(60);
    auto down = kpm_action(Sign::minus, {H(2), H(4)}, half);
    CHECK(down.annihilated);
    CHECK(down.coefficient == 0);
    auto up = kpm_action(Sign::plus, {H(0), H(2)}, half);
    CHECK(abs(up.coefficient - sqrt(Real("2.5"))) < tight);
    CHECK(up.label.mu == H(4));
    // <mu+1|K+|mu> = <mu|K-|mu+1>
    const Real q("0.5");
    for (int tk = 0; tk <= 5; ++tk)
        for (int tmu = tk + 2; tmu <= tk + 10; tmu += 2) {
            auto a = kpm_action(Sign::plus, {H(tk), H(tmu)}, half);
            auto b = kpm_action(Sign::minus, {H(tk), H(tmu + 2)}, half);
            CHECK(abs(a.coefficient - b.coefficient) < tight * a.coefficient);
            CHECK(abs(a.coefficient - ref::raise(q, tk, tmu)) < tight * a.coefficient);
        }
}

TEST_CASE("ladder powers") {
    PrecisionScope p(60);
    auto id = kpm_power_coeff(Sign::plus, 0, {H(3), H(5)}, half);
    CHECK(abs(id.coefficient - 1) < tight);
    CHECK(id.label.mu == H(5));
    CHECK(kpm_power_coeff(Sign::minus, 3, {H(0), H(6)}, half).coefficient == 0);
    CHECK(kpm_power_coeff(Sign::minus, 3, {H(0), H(6)}, half).annihilated);
    CHECK(kpm_power_coeff(Sign::minus, 2, {H(0), H(6)}, half).coefficient > 0);
    CHECK_THROWS_AS(kpm_power_coeff(Sign::plus, -1, {H(0), H(2)}, half), DomainError);
}

TEST_CASE("Casimir eigenvalue") {
    PrecisionScope p(60);
    CHECK(casimir_eigenvalue(Rat(0), half) == 0);
    CHECK(abs(casimir_eigenvalue(Rat(1), half) - Real("2.5")) < tight);
    CHECK(abs(casimir_eigenvalue(Rat(1), half) - casimir_eigenvalue(Rat(1), half.inverse())) < tight);
}

TEST_CASE("su_q(2) ladder") {
    PrecisionScope p(60);
    CHECK(jpm_action(Sign::plus, {H(2), H(2)}, 1, half).coefficient == 0);
    CHECK(jpm_action(Sign::plus, {H(2), H(2)}, 1, half).annihilated);
    CHECK(abs(jpm_action(Sign::minus, {H(2), H(0)}, 0, half).coefficient - 1) < tight);
    // J-^{2j} |j j> = [2j]! |j -j>
    for (int tj = 0; tj <= 8; ++tj) {
        auto r = jpm_action(Sign::minus, {H(tj), H(tj)}, tj, half);
        CHECK(r.label.m == H(-tj));
        CHECK(abs(r.coefficient - ref::qfact(Real("0.5"), tj)) < tight * r.coefficient);
    }
}

TEST_CASE("coupled generator terms") {
    PrecisionScope p(60);
    auto t0 = coupled_generator_term(Kind::pos_pos, Sign::plus, 0, 0, half);
    CHECK(abs(t0.binom - 1) < tight);
    CHECK(t0.sign == 1);
    CHECK(t0.power_first == 0);
    CHECK(t0.power_second == 0);
    auto tm = coupled_generator_term(Kind::mixed, Sign::minus, 0, 1, half);
    CHECK(tm.sign == -1);
    CHECK(tm.power_second == 1);
    auto tp = coupled_generator_term(Kind::pos_pos, Sign::plus, 1, 2, half);
    CHECK(abs(tp.binom - Real("2.5")) < tight);
    CHECK(tp.sign == 1);
    CHECK(tp.power_first == 1);
    CHECK(tp.power_second == 1);
}
