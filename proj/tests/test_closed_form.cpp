#include <doctest.h>

#include "rds/closed_form.hpp"
#include "rds/orbit.hpp"
#include "rds/sampling.hpp"

using namespace rds;

namespace {

CoefficientSpec unit_spec() {
    return CoefficientSpec::constant(Rational(1), Rational(1), Rational(1), Rational(1));
}

InitialState ones() {
    return InitialState(Rational(1), Rational(1), Rational(1), Rational(1), Rational(1),
                        Rational(1));
}

Rational eval(Branch branch, const CoefficientSpec& spec, const InitialState& init, long n,
              int j, Component comp) {
    ClosedFormQuery q{branch, j, n, comp};
    switch (branch) {
    case Branch::Constant: {
        auto values = constant_values(spec);
        REQUIRE(values.has_value());
        return closed_constant((*values)[0], (*values)[1], (*values)[2], (*values)[3], init, q);
    }
    case Branch::Period4:
        return closed_period4(spec, init, q);
    case Branch::General:
        return closed_general(spec, init, q);
    }
    throw Error("unreachable");
}

} // namespace

TEST_CASE("index split: 4n + j with j in {-2..1} covers every index >= -2") {
    CHECK(split_index(-2) == std::pair<long, int>{0, -2});
    CHECK(split_index(0) == std::pair<long, int>{0, 0});
    CHECK(split_index(1) == std::pair<long, int>{0, 1});
    CHECK(split_index(2) == std::pair<long, int>{1, -2});
    CHECK(split_index(5) == std::pair<long, int>{1, 1});
    CHECK(split_index(9) == std::pair<long, int>{2, 1});
    for (long m = -2; m <= 50; ++m) {
        auto [n, j] = split_index(m);
        CHECK(4 * n + j == m);
        CHECK(j >= -2);
        CHECK(j <= 1);
        CHECK(n >= 0);
    }
}

TEST_CASE("queries outside the residue system are rejected") {
    ClosedFormQuery bad_j{Branch::General, 2, 0, Component::X};
    CHECK_THROWS_AS(closed_general(unit_spec(), ones(), bad_j), Error);
    ClosedFormQuery bad_n{Branch::General, 0, -1, Component::X};
    CHECK_THROWS_AS(closed_general(unit_spec(), ones(), bad_n), Error);
}

TEST_CASE("n = 0 echoes the start values on every branch") {
    auto p4 = CoefficientSpec::periodic(
        {Rational(1), Rational(2), Rational(1), Rational(1)},
        {Rational(0), Rational(1), Rational(0), Rational(1)},
        {Rational(1), Rational(1), Rational(3), Rational(1)},
        {Rational(1), Rational(0), Rational(0), Rational(1)});
    InitialState init(Rational(3), Rational(-1, 2), Rational(5), Rational(1, 7), Rational(2),
                      Rational(-4, 3));
    for (Branch branch : {Branch::General, Branch::Period4}) {
        const CoefficientSpec& spec = branch == Branch::Period4 ? p4 : unit_spec();
        CHECK(eval(branch, spec, init, 0, -2, Component::X) == init.x(-2));
        CHECK(eval(branch, spec, init, 0, -1, Component::X) == init.x(-1));
        CHECK(eval(branch, spec, init, 0, 0, Component::X) == init.x(0));
        CHECK(eval(branch, spec, init, 0, -2, Component::Y) == init.y(-2));
        CHECK(eval(branch, spec, init, 0, -1, Component::Y) == init.y(-1));
        CHECK(eval(branch, spec, init, 0, 0, Component::Y) == init.y(0));
    }
    CHECK(eval(Branch::Constant, unit_spec(), init, 0, -2, Component::X) == init.x(-2));
    CHECK(eval(Branch::Constant, unit_spec(), init, 0, 0, Component::Y) == init.y(0));
}

TEST_CASE("all-ones orbit values from every branch") {
    auto p4_unit = CoefficientSpec::periodic(
        {Rational(1), Rational(1), Rational(1), Rational(1)},
        {Rational(1), Rational(1), Rational(1), Rational(1)},
        {Rational(1), Rational(1), Rational(1), Rational(1)},
        {Rational(1), Rational(1), Rational(1), Rational(1)});
    Orbit orbit = iterate(unit_spec(), ones(), 9);
    for (long n = 0; n <= 2; ++n) {
        for (int j = -2; j <= 1; ++j) {
            const long m = 4 * n + j;
            for (Component comp : {Component::X, Component::Y}) {
                const Rational& want = comp == Component::X ? orbit.x(m) : orbit.y(m);
                CHECK(eval(Branch::General, unit_spec(), ones(), n, j, comp) == want);
                CHECK(eval(Branch::Constant, unit_spec(), ones(), n, j, comp) == want);
                CHECK(eval(Branch::Period4, p4_unit, ones(), n, j, comp) == want);
                SignPattern all_ones;
                CHECK(closed_unit(all_ones, ones(), ClosedFormQuery{Branch::Constant, j, n, comp}) ==
                      want);
            }
        }
    }
    // Pinned spot values: x[4] = 1 and x[5] = 1/4 on this orbit.
    CHECK(eval(Branch::General, unit_spec(), ones(), 1, 0, Component::X) == Rational(1));
    CHECK(eval(Branch::General, unit_spec(), ones(), 1, 1, Component::X) == Rational(1, 4));
    CHECK(eval(Branch::General, unit_spec(), ones(), 1, -1, Component::Y) == Rational(1, 3));
}

TEST_CASE("constant route equals general route on random constant specs") {
    SplitMix64 rng(47);
    for (int i = 0; i < 15; ++i) {
        Instance inst = live_instance(rng, CoeffKind::Constant, 1, 13);
        Orbit orbit = iterate(inst.spec, inst.init, 13);
        for (long n = 0; n <= 3; ++n) {
            for (int j = -2; j <= 1; ++j) {
                for (Component comp : {Component::X, Component::Y}) {
                    Rational general = eval(Branch::General, inst.spec, inst.init, n, j, comp);
                    Rational constant = eval(Branch::Constant, inst.spec, inst.init, n, j, comp);
                    const long m = 4 * n + j;
                    CHECK(general == constant);
                    CHECK(general == (comp == Component::X ? orbit.x(m) : orbit.y(m)));
                }
            }
        }
    }
}

TEST_CASE("period-4 route equals general route on random period-4 specs") {
    SplitMix64 rng(53);
    for (int i = 0; i < 15; ++i) {
        Instance inst = live_instance(rng, CoeffKind::Periodic, 4, 13);
        Orbit orbit = iterate(inst.spec, inst.init, 13);
        for (long n = 0; n <= 3; ++n) {
            for (int j = -2; j <= 1; ++j) {
                for (Component comp : {Component::X, Component::Y}) {
                    Rational p4 = eval(Branch::Period4, inst.spec, inst.init, n, j, comp);
                    Rational general = eval(Branch::General, inst.spec, inst.init, n, j, comp);
                    const long m = 4 * n + j;
                    CHECK(p4 == general);
                    CHECK(p4 == (comp == Component::X ? orbit.x(m) : orbit.y(m)));
                }
            }
        }
    }
}

TEST_CASE("the period-4 route refuses other specs") {
    ClosedFormQuery q{Branch::Period4, 0, 1, Component::X};
    CHECK_THROWS_AS(closed_period4(unit_spec(), ones(), q), Error);
    auto p2 = CoefficientSpec::periodic({Rational(1), Rational(2)}, {Rational(0), Rational(0)},
                                        {Rational(1), Rational(1)}, {Rational(0), Rational(0)});
    CHECK_THROWS_AS(closed_period4(p2, ones(), q), Error);
}

TEST_CASE("the sign-pattern route insists on unit coefficients") {
    SignPattern bad;
    bad.a = 2;
    CHECK_THROWS_AS(closed_unit(bad, ones(), ClosedFormQuery{}), Error);
}

TEST_CASE("sign patterns match iteration") {
    SplitMix64 rng(59);
    for (int bits = 0; bits < 16; ++bits) {
        SignPattern pattern{(bits & 1) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 4) ? -1 : 1,
                            (bits & 8) ? -1 : 1};
        auto spec = CoefficientSpec::constant(Rational(pattern.a), Rational(pattern.b),
                                              Rational(pattern.c), Rational(pattern.d));
        InitialState init = live_init(rng, spec, 9);
        Orbit orbit = iterate(spec, init, 9);
        for (long n = 0; n <= 2; ++n) {
            for (int j = -2; j <= 1; ++j) {
                for (Component comp : {Component::X, Component::Y}) {
                    Rational got =
                        closed_unit(pattern, init, ClosedFormQuery{Branch::Constant, j, n, comp});
                    const long m = 4 * n + j;
                    CHECK(got == (comp == Component::X ? orbit.x(m) : orbit.y(m)));
                }
            }
        }
    }
}

TEST_CASE("queries at or past an orbit death are refused with the death step") {
    // Step-0 x death: a + b x[-2] y[-1] = 1 + (1)(-1) = 0.
    InitialState dead(Rational(1), Rational(1), Rational(1), Rational(1), Rational(-1),
                      Rational(1));
    for (long n = 0; n <= 2; ++n) {
        for (int j = -2; j <= 1; ++j) {
            if (4 * n + j < 1) continue;
            ClosedFormQuery q{Branch::General, j, n, Component::X};
            try {
                closed_general(unit_spec(), dead, q);
                FAIL("expected DenominatorVanished for index " << (4 * n + j));
            } catch (const DenominatorVanished& e) {
                CHECK(e.step == 0);
                CHECK(e.reason == ForbiddenReason::XDenominator);
            }
        }
    }
    // The start values stay addressable.
    CHECK(closed_general(unit_spec(), dead, ClosedFormQuery{Branch::General, -1, 0,
                                                            Component::Y}) == Rational(-1));
}

TEST_CASE("a death mid-orbit splits queries into served and refused") {
    // Dies at step 1 (x denominator), so indices up to 1 are fine and 2 on
    // are refused.
    auto spec = CoefficientSpec::constant(Rational(1), Rational(1), Rational(1), Rational(0));
    InitialState init(Rational(1), Rational(1), Rational(1), Rational(1), Rational(1),
                      Rational(-1));
    Orbit orbit = iterate(spec, init, 10);
    REQUIRE(orbit.forbidden_step() == 1);
    CHECK(closed_general(spec, init, ClosedFormQuery{Branch::General, 1, 0, Component::X}) ==
          orbit.x(1));
    CHECK(closed_general(spec, init, ClosedFormQuery{Branch::General, 1, 0, Component::Y}) ==
          orbit.y(1));
    for (int j = -2; j <= 1; ++j) {
        ClosedFormQuery q{Branch::General, j, 1, Component::X};
        CHECK_THROWS_AS(closed_general(spec, init, q), DenominatorVanished);
    }
}
