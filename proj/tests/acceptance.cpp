// Acceptance gate: one labeled line per criterion, all comparisons exact.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "rds/checks.hpp"
#include "rds/closed_form.hpp"
#include "rds/orbit.hpp"
#include "rds/periodicity.hpp"
#include "rds/sampling.hpp"
#include "rds/scaling.hpp"

using namespace rds;

namespace {

CheckResult merge(CheckResult a, const CheckResult& b) {
    a.passed += b.passed;
    a.total += b.total;
    if (a.failure.empty()) a.failure = b.failure;
    return a;
}

CheckResult pinned(bool ok, const std::string& what) {
    CheckResult r;
    r.total = 1;
    r.passed = ok ? 1 : 0;
    if (!ok) r.failure = "pinned witness: " + what;
    return r;
}

// Criterion 6 witness: a = c = 1/2, b = d = 1, start 1, 1/2, 1, 1, 1/2, 1.
CheckResult period2_witness() {
    auto spec = CoefficientSpec::constant(Rational(1, 2), Rational(1), Rational(1, 2),
                                          Rational(1));
    InitialState init(Rational(1), Rational(1, 2), Rational(1), Rational(1), Rational(1, 2),
                      Rational(1));
    if (!check_period2_conditions(Rational(1, 2), Rational(1), Rational(1, 2), Rational(1), init))
        return pinned(false, "condition checker rejects it");
    Orbit orbit = iterate(spec, init, 200);
    if (!orbit.complete()) return pinned(false, "orbit dies");
    for (long n = -2; n + 2 <= orbit.last_index(); ++n)
        if (orbit.x(n + 2) != orbit.x(n) || orbit.y(n + 2) != orbit.y(n))
            return pinned(false, "orbit fails to repeat at index " + std::to_string(n));
    if (detect_period(orbit, 8) != 2) return pinned(false, "minimal period is not 2");
    return pinned(true, "");
}

// Criterion 7 witness: a = c = 1, b = 1, d = -1, x = (1, 2, -1), y = (1, -2, -1);
// the x values cycle through 1, 2, -1, -2.
CheckResult period4_witness() {
    auto spec = CoefficientSpec::constant(Rational(1), Rational(1), Rational(1), Rational(-1));
    InitialState init(Rational(1), Rational(2), Rational(-1), Rational(1), Rational(-2),
                      Rational(-1));
    if (!check_period4_conditions(Rational(1), Rational(1), Rational(1), Rational(-1), init))
        return pinned(false, "condition checker rejects it");
    Orbit orbit = iterate(spec, init, 200);
    if (!orbit.complete()) return pinned(false, "orbit dies");
    const Rational cycle[4] = {Rational(1), Rational(2), Rational(-1), Rational(-2)};
    for (long n = -2; n <= orbit.last_index(); ++n)
        if (orbit.x(n) != cycle[(n + 2) % 4])
            return pinned(false, "x cycle broken at index " + std::to_string(n));
    for (long n = -2; n + 4 <= orbit.last_index(); ++n)
        if (orbit.y(n + 4) != orbit.y(n))
            return pinned(false, "y fails to repeat at index " + std::to_string(n));
    if (detect_period(orbit, 8) != 4) return pinned(false, "minimal period is not 4");
    return pinned(true, "");
}

// Criterion 9's negative half: the opposite-sign exponent convention must
// fail to commute with iteration somewhere.
CheckResult opposite_sign_fails() {
    auto spec = CoefficientSpec::constant(Rational(1), Rational(1), Rational(1), Rational(1));
    InitialState ones(Rational(1), Rational(1), Rational(1), Rational(1), Rational(1),
                      Rational(1));
    ScalingReport report =
        verify_scaling(spec, ones, Rational(2), 6, ExponentConvention::OppositeSign);
    return pinned(!report.ok(), "the opposite-sign action passed on the all-ones orbit");
}

struct Criterion {
    std::string label;
    CheckResult (*run)();
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"general closed form == iteration, 200 instances, all residues, n <= 10",
         [] { return suite_general(101, 200, 10); }},
        {"invariant closed form == affine iteration (200 instances, n <= 25) and the "
         "affine relations hold on simulated orbits",
         [] { return suite_uv(102, 200, 25); }},
        {"two-step and four-step reconstruction == iteration, 100 instances, indices "
         "through 24",
         [] { return suite_reconstruction(103, 100, 24); }},
        {"constant route == general route == iteration and all 16 sign patterns == "
         "iteration, n <= 6",
         [] {
             return merge(suite_constant(104, 100, 6), suite_unit16(105, 6, 6));
         }},
        {"period-4 route == general route == iteration, 100 specs, n <= 8",
         [] { return suite_period4(106, 100, 8); }},
        {"2-periodic sufficient condition: 100 constructed instances repeat for 200 "
         "steps, plus the pinned witness",
         [] { return merge(suite_period2_theorem(107, 100, 200), period2_witness()); }},
        {"4-periodic sufficient condition: 100 constructed instances repeat for 200 "
         "steps, plus the pinned witness",
         [] { return merge(suite_period4_theorem(108, 100, 200), period4_witness()); }},
        {"sharpened 4-periodic condition (no product constraint): 100 instances repeat",
         [] { return suite_remark(109, 100, 200); }},
        {"scaling action commutes with iteration (100 instances, t in {2, 1/3, 5/7}, "
         "30 steps, invariants fixed) and the opposite-sign action fails",
         [] {
             return merge(suite_symmetry(110, 100,
                                         {Rational(2), Rational(1, 3), Rational(5, 7)}, 30),
                          opposite_sign_fails());
         }},
        {"step-0 forbidden instances: iteration reports step 0, closed form refuses "
         "every index >= 1",
         [] { return suite_forbidden(111, 20, 5); }},
    };

    int failures = 0;
    int number = 0;
    for (const Criterion& criterion : criteria) {
        ++number;
        const auto start = std::chrono::steady_clock::now();
        CheckResult result = criterion.run();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = result.ok();
        std::printf("[%s] %2d. %s (%ld/%ld, %.1fs)\n", ok ? "PASS" : "FAIL", number,
                    criterion.label.c_str(), result.passed, result.total, seconds);
        if (!ok) {
            ++failures;
            std::printf("       %s\n", result.failure.c_str());
        }
    }
    if (failures == 0)
        std::printf("all %d criteria pass\n", number);
    else
        std::printf("%d of %d criteria FAIL\n", failures, number);
    return failures;
}
