#include "rds/scaling.hpp"

#include <sstream>

namespace rds {

namespace {

// t^((-1)^n) for the x component; the y exponent flips under OppositeSign.
Rational x_factor(const Rational& t, long n) {
    return (n % 2 == 0) ? t : t.reciprocal();
}

Rational y_factor(const Rational& t, long n, ExponentConvention convention) {
    const Rational f = x_factor(t, n);
    return convention == ExponentConvention::SameSign ? f : f.reciprocal();
}

} // namespace

InitialState apply_scaling(const InitialState& init, const Rational& t,
                           ExponentConvention convention) {
    if (t.is_zero())
        throw InvalidGroupParameter();
    return InitialState(x_factor(t, -2) * init.x(-2), x_factor(t, -1) * init.x(-1),
                        x_factor(t, 0) * init.x(0), y_factor(t, -2, convention) * init.y(-2),
                        y_factor(t, -1, convention) * init.y(-1),
                        y_factor(t, 0, convention) * init.y(0));
}

ScalingReport verify_scaling(const CoefficientSpec& spec, const InitialState& init,
                             const Rational& t, long steps,
                             ExponentConvention convention) {
    const Orbit base = iterate(spec, init, steps);
    if (!base.complete())
        throw Error("verify_scaling: base orbit hits the forbidden set at step " +
                    std::to_string(base.forbidden_step()));

    ScalingReport report;
    const Orbit scaled = iterate(spec, apply_scaling(init, t, convention), steps);
    if (!scaled.complete()) {
        std::ostringstream os;
        os << "scaled orbit dies at step " << scaled.forbidden_step() << " ("
           << reason_name(scaled.forbidden_reason()) << " denominator)";
        report.detail = os.str();
        return report;
    }
    report.scaled_complete = true;

    for (long n = -2; n <= base.last_index(); ++n) {
        const Rational want_x = x_factor(t, n) * base.x(n);
        const Rational want_y = y_factor(t, n, convention) * base.y(n);
        if (scaled.x(n) != want_x || scaled.y(n) != want_y) {
            std::ostringstream os;
            os << "orbit mismatch at n=" << n << ": scaled x=" << scaled.x(n)
               << " y=" << scaled.y(n) << ", pointwise-scaled x=" << want_x
               << " y=" << want_y;
            report.detail = os.str();
            return report;
        }
    }
    report.orbit_matches = true;

    const InvariantTrack base_track = track_from_orbit(base);
    const InvariantTrack scaled_track = track_from_orbit(scaled);
    for (long n = 0; n < base_track.slots(); ++n) {
        const size_t i = static_cast<size_t>(n);
        if (base_track.us[i] != scaled_track.us[i] || base_track.vs[i] != scaled_track.vs[i]) {
            std::ostringstream os;
            os << "invariant mismatch at slot " << n << ": U " << scaled_track.us[i]
               << " vs " << base_track.us[i] << ", V " << scaled_track.vs[i] << " vs "
               << base_track.vs[i];
            report.detail = os.str();
            return report;
        }
    }
    report.invariants_match = true;
    return report;
}

} // namespace rds
