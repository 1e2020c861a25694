#include <doctest.h>

#include "rds/orbit.hpp"
#include "rds/periodicity.hpp"
#include "rds/sampling.hpp"

using namespace rds;

namespace {

const Rational one(1);

InitialState period2_witness() {
    return InitialState(Rational(1), Rational(1, 2), Rational(1), Rational(1), Rational(1, 2),
                        Rational(1));
}

InitialState period4_witness() {
    return InitialState(Rational(1), Rational(2), Rational(-1), Rational(1), Rational(-2),
                        Rational(-1));
}

} // namespace

TEST_CASE("2-periodic condition accepts the hand-checked witness") {
    CHECK(check_period2_conditions(Rational(1, 2), one, Rational(1, 2), one, period2_witness()));
}

TEST_CASE("2-periodic condition rejects near misses") {
    // Perturb each requirement once.
    CHECK(!check_period2_conditions(Rational(1, 2), one, Rational(1, 3), one,
                                    period2_witness())); // a != c
    CHECK(!check_period2_conditions(Rational(1, 2), one, Rational(1, 2), Rational(2),
                                    period2_witness())); // b != d
    InitialState off(Rational(1), Rational(1, 2), Rational(2), Rational(1), Rational(1, 2),
                     Rational(1)); // x[0] != x[-2]
    CHECK(!check_period2_conditions(Rational(1, 2), one, Rational(1, 2), one, off));
    InitialState wrong_product(Rational(1), Rational(1, 3), Rational(1), Rational(1),
                               Rational(1, 2), Rational(1));
    CHECK(!check_period2_conditions(Rational(1, 2), one, Rational(1, 2), one, wrong_product));
}

TEST_CASE("conditions that divide by b refuse b = 0") {
    CHECK_THROWS_AS(check_period2_conditions(Rational(1, 2), Rational(0), Rational(1, 2),
                                             Rational(0), period2_witness()),
                    ConditionUndefined);
    CHECK_THROWS_AS(check_period4_conditions(one, Rational(0), one, Rational(0),
                                             period4_witness()),
                    ConditionUndefined);
}

TEST_CASE("4-periodic condition accepts the hand-checked witness") {
    CHECK(check_period4_conditions(one, one, one, Rational(-1), period4_witness()));
    CHECK(!check_period4_conditions(one, one, one, one, period4_witness())); // d != -b
    InitialState off(Rational(1), Rational(2), Rational(1), Rational(1), Rational(-2),
                     Rational(-1)); // x[0] != -x[-2]
    CHECK(!check_period4_conditions(one, one, one, Rational(-1), off));
}

TEST_CASE("the sharpened condition drops the product constraint") {
    // Free middle values, unconstrained product: still accepted.
    InitialState init(Rational(5), Rational(7), Rational(-5), Rational(3), Rational(11),
                      Rational(-3));
    CHECK(check_period4_remark(one, one, one, Rational(-1), init));
    // But it is specific to a = b = c = 1, d = -1.
    CHECK(!check_period4_remark(one, one, one, one, init));
    CHECK(!check_period4_remark(Rational(2), one, one, Rational(-1), init));
    // And the negated third values are still required.
    InitialState off(Rational(5), Rational(7), Rational(5), Rational(3), Rational(11),
                     Rational(-3));
    CHECK(!check_period4_remark(one, one, one, Rational(-1), off));
}

TEST_CASE("witness orbits actually repeat") {
    auto spec2 = CoefficientSpec::constant(Rational(1, 2), one, Rational(1, 2), one);
    Orbit orbit2 = iterate(spec2, period2_witness(), 40);
    REQUIRE(orbit2.complete());
    for (long n = -2; n + 2 <= orbit2.last_index(); ++n) {
        CHECK(orbit2.x(n + 2) == orbit2.x(n));
        CHECK(orbit2.y(n + 2) == orbit2.y(n));
    }
    CHECK(detect_period(orbit2, 8) == 2);

    auto spec4 = CoefficientSpec::constant(one, one, one, Rational(-1));
    Orbit orbit4 = iterate(spec4, period4_witness(), 40);
    REQUIRE(orbit4.complete());
    // The x values cycle through 1, 2, -1, -2.
    CHECK(orbit4.x(1) == Rational(-2));
    CHECK(orbit4.y(1) == Rational(2));
    CHECK(orbit4.x(2) == Rational(1));
    for (long n = -2; n + 4 <= orbit4.last_index(); ++n) {
        CHECK(orbit4.x(n + 4) == orbit4.x(n));
        CHECK(orbit4.y(n + 4) == orbit4.y(n));
    }
    CHECK(detect_period(orbit4, 8) == 4);
}

TEST_CASE("detect_period reports the minimal period") {
    // A 2-periodic instance whose start values are already constant collapses
    // to a fixed point, so the minimal period is 1.
    auto spec = CoefficientSpec::constant(Rational(1, 2), one, Rational(1, 2), one);
    InitialState fixed(one, one, one, Rational(1, 2), Rational(1, 2), Rational(1, 2));
    Orbit orbit = iterate(spec, fixed, 30);
    REQUIRE(orbit.complete());
    CHECK(detect_period(orbit, 8) == 1);
}

TEST_CASE("aperiodic orbits report no period") {
    auto spec = CoefficientSpec::constant(one, one, one, one);
    InitialState ones(one, one, one, one, one, one);
    Orbit orbit = iterate(spec, ones, 40);
    CHECK(detect_period(orbit, 8) == std::nullopt);
}

TEST_CASE("detect_period needs a window of three full periods") {
    auto spec = CoefficientSpec::constant(Rational(1, 2), one, Rational(1, 2), one);
    Orbit short_orbit = iterate(spec, period2_witness(), 10);
    // 13 values held, bound 8 needs 24.
    CHECK_THROWS_AS(detect_period(short_orbit, 8), InsufficientWindow);
    CHECK(detect_period(short_orbit, 4) == 2);

    auto unit = CoefficientSpec::constant(one, one, one, one);
    InitialState dead(one, one, one, one, Rational(-1), one);
    Orbit forbidden = iterate(unit, dead, 40);
    CHECK_THROWS_AS(detect_period(forbidden, 2), InsufficientWindow);
}

TEST_CASE("constructive samplers hit their conditions") {
    SplitMix64 rng(71);
    for (int i = 0; i < 25; ++i) {
        Instance p2 = period2_instance(rng);
        auto v2 = constant_values(p2.spec);
        REQUIRE(v2.has_value());
        CHECK(check_period2_conditions((*v2)[0], (*v2)[1], (*v2)[2], (*v2)[3], p2.init));

        Instance p4 = period4_instance(rng);
        auto v4 = constant_values(p4.spec);
        REQUIRE(v4.has_value());
        CHECK(check_period4_conditions((*v4)[0], (*v4)[1], (*v4)[2], (*v4)[3], p4.init));

        Instance rm = remark_instance(rng, 20);
        auto vr = constant_values(rm.spec);
        REQUIRE(vr.has_value());
        CHECK(check_period4_remark((*vr)[0], (*vr)[1], (*vr)[2], (*vr)[3], rm.init));
    }
}
