#pragma once

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

#include "rds/coefficients.hpp"
#include "rds/orbit.hpp"
#include "rds/rational.hpp"

namespace rds {

// Reciprocals of the cross products along a trajectory, aligned so that slot n
// holds U[n] = 1/(x[n-2] y[n-1]) and V[n] = 1/(x[n-1] y[n-2]). Under this
// alignment the nonlinear recurrence linearizes: the slots obey the decoupled
// affine recurrences
//   V[n+2] = a[n] U[n] + b[n],   U[n+2] = c[n] V[n] + d[n]
// and slot values stay finite (the recurrences are total) even where the
// trajectory itself leaves its domain; a vanishing slot is exactly a
// forbidden-set hit (V[k+2] = 0 kills x[k+1], U[k+2] = 0 kills y[k+1]).
struct InvariantTrack {
    std::vector<Rational> us, vs;
    long slots() const { return static_cast<long>(us.size()); }
};

// Per-slot seeds U[0..3], V[0..3] for the four-step closed form.
struct InvariantSeeds {
    std::array<Rational, 4> u, v;
};

// Read the track off a computed orbit: slots 0 .. last_index()+1.
InvariantTrack track_from_orbit(const Orbit& orbit);

// One application of the affine recurrences: (V[n+2], U[n+2]) from slot n.
std::pair<Rational, Rational> invariant_step(const CoefficientSpec& spec,
                                             const InvariantTrack& track, long n);

// Fill slots 0 .. max_slot from seed slots 0 and 1 by the affine recurrences.
InvariantTrack iterate_invariants(const CoefficientSpec& spec, const Rational& u0,
                                  const Rational& u1, const Rational& v0,
                                  const Rational& v1, long max_slot);

// Slots 0 and 1 straight from the start values, slots 2 and 3 by one
// application of the recurrences.
InvariantSeeds seeds_from_init(const CoefficientSpec& spec, const InitialState& init);

// Closed form of the affine recurrences, four slots at a stride: for j in
// 0..3 and n >= 0,
//   U[4n+j] = U[j] * prod_{k<n} a[4k+j] c[4k+j+2]
//           + sum_{l<n} (b[4l+j] c[4l+j+2] + d[4l+j+2]) * prod_{l<k<n} a[4k+j] c[4k+j+2]
//   V[4n+j] = V[j] * prod_{k<n} a[4k+j+2] c[4k+j]
//           + sum_{l<n} (a[4l+j+2] d[4l+j] + b[4l+j+2]) * prod_{l<k<n} a[4k+j+2] c[4k+j]
// (empty products 1, empty sums 0). Evaluated literally with suffix-product
// tables, independent of invariant_step, so the two routes cross-check.
std::pair<Rational, Rational> invariant_closed(const CoefficientSpec& spec,
                                               const InvariantSeeds& seeds, long n, int j);

// Rebuild trajectory values from a track plus the four earliest start values.
// Indices here count from the earliest start value: index 0 is x[-2] (so
// trajectory index m sits at index m+2), seeds x0 = x[-2], x1 = x[-1],
// y0 = y[-2], y1 = y[-1]. Two-step products:
//   x[2n+j] = x[j] * prod_{i<n} U[2i+j]/V[2i+j+1]
//   y[2n+j] = y[j] * prod_{i<n} V[2i+j]/U[2i+j+1]
// Throws DivisionByZero if a slot in denominator position vanishes (possible
// for adversarial tracks that do not come from an orbit).
std::pair<Rational, Rational> reconstruct(const Rational& x0, const Rational& x1,
                                          const Rational& y0, const Rational& y1,
                                          const InvariantTrack& track, long index);

// Same values through the four-step regrouping
//   x[4n+j] = x[j] * prod_{i<n} (U[4i+j] U[4i+j+2])/(V[4i+j+1] V[4i+j+3])
// with the j = 2, 3 seeds derived by one two-step application.
std::pair<Rational, Rational> reconstruct_regrouped(const Rational& x0, const Rational& x1,
                                                    const Rational& y0, const Rational& y1,
                                                    const InvariantTrack& track, long index);

// CSV rows "n,U,V" in exact p/q text, one per slot.
void write_track_csv(std::ostream& os, const InvariantTrack& track);

} // namespace rds
