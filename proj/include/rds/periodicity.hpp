#pragma once

#include <optional>

#include "rds/orbit.hpp"
#include "rds/rational.hpp"

namespace rds {

// Sufficient condition for a 2-periodic orbit under constant coefficients:
//   a = c, b = d, x[-2] = x[0], y[-2] = y[0],
//   x[-1] y[-2] = x[-2] y[-1] = (1 - a)/b.
// Throws ConditionUndefined when b = 0 (the condition divides by b).
bool check_period2_conditions(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const InitialState& init);

// Sufficient condition for a 4-periodic orbit:
//   a = c, b = -d, x[0] = -x[-2], y[0] = -y[-2],
//   x[-1] y[-2] = -x[-2] y[-1] = (1 + a)/b.
// Throws ConditionUndefined when b = 0.
bool check_period4_conditions(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const InitialState& init);

// The sharpened 4-periodic condition for the unit coefficients a = b = c = 1,
// d = -1: only x[0] = -x[-2] and y[0] = -y[-2] are required, the product
// constraint on x[-1] y[-2] is deliberately absent.
bool check_period4_remark(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& d, const InitialState& init);

// Smallest p <= max_period with x[n+p] = x[n] and y[n+p] = y[n] for every
// index pair inside the orbit (from n = -2 on; exact comparisons), or nullopt.
// Fixed points report 1. The orbit must be complete and hold at least
// 3 * max_period values, else InsufficientWindow.
std::optional<long> detect_period(const Orbit& orbit, long max_period);

// detect_period output plus which sufficient conditions held.
struct PeriodReport {
    std::optional<long> period;
    long window = 0;  // number of value pairs examined
    bool thm2 = false, thm4 = false, remark = false;
};

} // namespace rds
