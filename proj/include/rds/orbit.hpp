#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "rds/coefficients.hpp"
#include "rds/rational.hpp"

namespace rds {

// The six start values x[-2], x[-1], x[0], y[-2], y[-1], y[0]. All must be
// nonzero: the recurrence divides by y[n] and x[n], and the closed forms
// divide by every one of the six.
class InitialState {
public:
    InitialState(Rational x_m2, Rational x_m1, Rational x_0,
                 Rational y_m2, Rational y_m1, Rational y_0);

    // n in {-2, -1, 0}.
    const Rational& x(int n) const { return xs_[static_cast<size_t>(n + 2)]; }
    const Rational& y(int n) const { return ys_[static_cast<size_t>(n + 2)]; }

private:
    std::array<Rational, 3> xs_, ys_;
};

// A computed trajectory: values x[n], y[n] for n = -2 .. last_index().
// Complete orbits reach the requested step count; otherwise the orbit stopped
// because the denominator of one component vanished at forbidden_step() (the
// values up to that step are retained).
class Orbit {
public:
    const Rational& x(long n) const { return xs_[static_cast<size_t>(n + 2)]; }
    const Rational& y(long n) const { return ys_[static_cast<size_t>(n + 2)]; }
    long last_index() const { return static_cast<long>(xs_.size()) - 3; }

    bool complete() const { return !death_; }
    long forbidden_step() const { return death_->first; }
    ForbiddenReason forbidden_reason() const { return death_->second; }

private:
    friend Orbit iterate(const CoefficientSpec&, const InitialState&, long);
    std::vector<Rational> xs_, ys_;  // slot 0 holds index -2
    std::optional<std::pair<long, ForbiddenReason>> death_;
};

// One application of the recurrence: from the window
// (x[n-2], x[n-1], x[n], y[n-2], y[n-1], y[n]) produce (x[n+1], y[n+1]).
// Throws ForbiddenSetError when a denominator factor vanishes (the x factor
// is checked first).
std::pair<Rational, Rational> step(const CoefficientSpec& spec,
                                   const Rational& x_nm2, const Rational& x_nm1,
                                   const Rational& x_n, const Rational& y_nm2,
                                   const Rational& y_nm1, const Rational& y_n, long n);

// Apply `steps` steps from the start values. Forbidden-set hits are recorded
// in the orbit status, not thrown; coefficient table overruns propagate.
Orbit iterate(const CoefficientSpec& spec, const InitialState& init, long steps);

// CSV rows "n,x,y" (exact p/q text) from n = -2, a float pair per row when
// requested, then a trailing comment line:
//   # status=complete
//   # status=forbidden step=<k> eq=<x|y>
void write_csv(std::ostream& os, const Orbit& orbit, bool float_columns = false);

} // namespace rds
