#pragma once

#include <cstdint>

#include "rds/coefficients.hpp"
#include "rds/orbit.hpp"

namespace rds {

// Deterministic 64-bit generator (splitmix64). Hand-rolled on purpose:
// identical seeds must replay byte-identically on every platform, and the
// standard library's distribution algorithms are implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n >= 1, by threshold rejection (no modulo bias).
    std::uint64_t bounded(std::uint64_t n);

private:
    std::uint64_t state_;
};

// Independent stream for trial i of a run, so trials can execute in any
// order (or in parallel) and still replay.
std::uint64_t trial_seed(std::uint64_t run_seed, long trial);

// Uniform over numerators [-9, 9] minus {0} and denominators [1, 9].
Rational small_rational(SplitMix64& rng);

InitialState random_init(SplitMix64& rng);

CoefficientSpec random_constant_spec(SplitMix64& rng);
CoefficientSpec random_periodic_spec(SplitMix64& rng, long period);
CoefficientSpec random_tabulated_spec(SplitMix64& rng, long length);

struct Instance {
    CoefficientSpec spec;
    InitialState init;
};

// Draw (spec, init) of the given kind until the orbit stays off the forbidden
// set for `depth` steps. `length` is the period (Periodic) or table length
// (Tabulated); ignored for Constant.
Instance live_instance(SplitMix64& rng, CoeffKind kind, long length, long depth);

// Keep a fixed spec, redraw the six start values until the orbit stays alive
// for `depth` steps.
InitialState live_init(SplitMix64& rng, const CoefficientSpec& spec, long depth);

// Constructive samplers hitting the periodicity hypotheses exactly.
// 2-periodic: a = c (a != 1), b = d, x[0] = x[-2], y[0] = y[-2], and the two
// constrained start values solved from (1 - a)/b.
Instance period2_instance(SplitMix64& rng);
// 4-periodic: a = c (a != -1), d = -b, x[0] = -x[-2], y[0] = -y[-2], and the
// constrained values solved from (1 + a)/b.
Instance period4_instance(SplitMix64& rng);
// The sharpened condition: a = b = c = 1, d = -1, negated third start values,
// x[-1] and y[-1] free; redrawn until alive for `depth` steps (dead orbits
// say nothing about periodicity).
Instance remark_instance(SplitMix64& rng, long depth);

// An instance whose step-0 denominator vanishes by construction, in the
// component chosen by `reason`.
Instance dead_at_zero_instance(SplitMix64& rng, ForbiddenReason reason);

} // namespace rds
