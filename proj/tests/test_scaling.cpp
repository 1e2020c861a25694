#include <doctest.h>

#include "rds/sampling.hpp"
#include "rds/scaling.hpp"

using namespace rds;

namespace {

CoefficientSpec unit_spec() {
    return CoefficientSpec::constant(Rational(1), Rational(1), Rational(1), Rational(1));
}

InitialState ones() {
    return InitialState(Rational(1), Rational(1), Rational(1), Rational(1), Rational(1),
                        Rational(1));
}

bool same(const InitialState& a, const InitialState& b) {
    for (int n = -2; n <= 0; ++n)
        if (a.x(n) != b.x(n) || a.y(n) != b.y(n)) return false;
    return true;
}

} // namespace

TEST_CASE("the action multiplies by t at even indices, 1/t at odd ones") {
    InitialState init(Rational(3), Rational(5), Rational(7), Rational(11), Rational(13),
                      Rational(17));
    InitialState scaled = apply_scaling(init, Rational(2));
    CHECK(scaled.x(-2) == Rational(6));    // even index
    CHECK(scaled.x(-1) == Rational(5, 2)); // odd index
    CHECK(scaled.x(0) == Rational(14));
    CHECK(scaled.y(-2) == Rational(22));
    CHECK(scaled.y(-1) == Rational(13, 2));
    CHECK(scaled.y(0) == Rational(34));
}

TEST_CASE("t = 0 is not a group element") {
    CHECK_THROWS_AS(apply_scaling(ones(), Rational(0)), InvalidGroupParameter);
}

TEST_CASE("the actions form a one-parameter group") {
    SplitMix64 rng(61);
    for (int i = 0; i < 20; ++i) {
        InitialState init = random_init(rng);
        Rational t = small_rational(rng);
        Rational s = small_rational(rng);
        CHECK(same(apply_scaling(init, Rational(1)), init));
        CHECK(same(apply_scaling(apply_scaling(init, t), s), apply_scaling(init, t * s)));
        CHECK(same(apply_scaling(apply_scaling(init, t), t.reciprocal()), init));
    }
}

TEST_CASE("scale-then-iterate equals iterate-then-scale with invariants fixed") {
    ScalingReport report = verify_scaling(unit_spec(), ones(), Rational(2), 12);
    CHECK(report.scaled_complete);
    CHECK(report.orbit_matches);
    CHECK(report.invariants_match);
    CHECK(report.ok());

    SplitMix64 rng(67);
    for (int i = 0; i < 10; ++i) {
        Instance inst = live_instance(rng, CoeffKind::Tabulated, 12, 12);
        for (const Rational& t : {Rational(2), Rational(1, 3), Rational(5, 7), Rational(-2)}) {
            CHECK(verify_scaling(inst.spec, inst.init, t, 12).ok());
        }
    }
}

TEST_CASE("the opposite-sign convention does not preserve solutions") {
    // With t = 2 on the all-ones orbit the first computed x value comes out
    // 8/5 instead of the true 1/4 once y carries the opposite exponent.
    ScalingReport report =
        verify_scaling(unit_spec(), ones(), Rational(2), 6, ExponentConvention::OppositeSign);
    CHECK(!report.ok());
    CHECK(!report.orbit_matches);
}

TEST_CASE("scaling a dead orbit's start values is rejected by verify") {
    InitialState dead(Rational(1), Rational(1), Rational(1), Rational(1), Rational(-1),
                      Rational(1));
    CHECK_THROWS_AS(verify_scaling(unit_spec(), dead, Rational(2), 5), Error);
}
