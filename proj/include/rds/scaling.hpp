#pragma once

#include <string>

#include "rds/coefficients.hpp"
#include "rds/invariants.hpp"
#include "rds/orbit.hpp"

namespace rds {

// How the group parameter's exponent alternates across the two components.
// SameSign multiplies x[n] and y[n] both by t^((-1)^n); this is the action
// that maps solutions to solutions (the cross products x[n-2]y[n-1] and
// x[n-1]y[n-2] pick up t^(+1)t^(-1) = 1, so both recurrences are preserved).
// OppositeSign puts t^(-(-1)^n) on y instead; it does NOT preserve the
// recurrence and exists so tests can demonstrate that failure.
enum class ExponentConvention { SameSign, OppositeSign };

// Scale the six start values: x[n] -> t^((-1)^n) x[n] for n = -2, -1, 0 and
// the convention's choice on y. Throws InvalidGroupParameter on t = 0.
// Actions compose multiplicatively in t, and t = 1 is the identity.
InitialState apply_scaling(const InitialState& init, const Rational& t,
                           ExponentConvention convention = ExponentConvention::SameSign);

struct ScalingReport {
    bool scaled_complete = false;  // scaled orbit survived as far as the base one
    bool orbit_matches = false;    // scaled-start orbit == pointwise-scaled base orbit
    bool invariants_match = false; // U and V slots agree between the two orbits
    std::string detail;            // first discrepancy, if any
    bool ok() const { return scaled_complete && orbit_matches && invariants_match; }
};

// Iterate both the original and the scaled start values for `steps` steps and
// compare exactly: the scaled orbit must equal the pointwise-scaled original,
// and the invariant track must be untouched by the action. The base orbit
// must be complete for `steps` steps (throws Error otherwise).
ScalingReport verify_scaling(const CoefficientSpec& spec, const InitialState& init,
                             const Rational& t, long steps,
                             ExponentConvention convention = ExponentConvention::SameSign);

} // namespace rds
