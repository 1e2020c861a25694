#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rds/rational.hpp"
#include "rds/sampling.hpp"

namespace rds {

// Outcome of a randomized cross-checking run. Every comparison in every suite
// is exact; there are no tolerances anywhere.
struct CheckResult {
    long passed = 0;
    long total = 0;
    std::string failure;  // first failing trial, with replayable inputs in p/q form
    bool ok() const { return total > 0 && passed == total; }
};

// Explicit general solution vs direct iteration: every residue, both
// components, block counts 0..nmax, on live tabulated instances.
CheckResult suite_general(std::uint64_t seed, long trials, long nmax);

// Constant-coefficient route vs the general route vs iteration.
CheckResult suite_constant(std::uint64_t seed, long trials, long nmax);

// All sixteen +-1 coefficient patterns vs iteration, `trials` start-value
// draws per pattern; the two fully simplified patterns are also cross-checked
// against the constant route.
CheckResult suite_unit16(std::uint64_t seed, long trials, long nmax);

// Period-4 route vs the general route vs iteration on random period-4 specs.
CheckResult suite_period4(std::uint64_t seed, long trials, long nmax);

// Invariant layer: the four-step closed form vs slot-by-slot affine
// iteration (all residues, blocks 0..nmax), the affine recurrences pointwise
// on a simulated orbit, and orbit-derived slots vs recurrence-derived slots.
CheckResult suite_uv(std::uint64_t seed, long trials, long nmax);

// Rebuild trajectories from the invariant track via the two-step products
// and the four-step regrouping; both must reproduce iteration through
// trajectory index max_index.
CheckResult suite_reconstruction(std::uint64_t seed, long trials, long max_index);

// Scaling action: iterate-then-scale equals scale-then-iterate, and the
// invariant slots are untouched, for each group parameter in ts.
CheckResult suite_symmetry(std::uint64_t seed, long trials, const std::vector<Rational>& ts,
                           long steps);

// Constructively sampled instances of the 2-periodic sufficient condition:
// the checker accepts, and the orbit repeats with period dividing 2 at every
// index for `steps` steps.
CheckResult suite_period2_theorem(std::uint64_t seed, long trials, long steps);

// Same for the 4-periodic sufficient condition.
CheckResult suite_period4_theorem(std::uint64_t seed, long trials, long steps);

// Same for the sharpened condition without the product constraint.
CheckResult suite_remark(std::uint64_t seed, long trials, long steps);

// Instances engineered to die at step 0: iteration must report the forbidden
// set at step 0 with the engineered component, and every closed-form query
// addressing index >= 1 must raise, while queries addressing the start
// values still answer.
CheckResult suite_forbidden(std::uint64_t seed, long trials, long nmax);

} // namespace rds
