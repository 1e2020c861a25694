#include "rds/periodicity.hpp"

namespace rds {

bool check_period2_conditions(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const InitialState& init) {
    if (b.is_zero())
        throw ConditionUndefined();
    const Rational target = (Rational(1) - a) / b;
    return a == c && b == d && init.x(-2) == init.x(0) && init.y(-2) == init.y(0) &&
           init.x(-1) * init.y(-2) == target && init.x(-2) * init.y(-1) == target;
}

bool check_period4_conditions(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const InitialState& init) {
    if (b.is_zero())
        throw ConditionUndefined();
    const Rational target = (Rational(1) + a) / b;
    return a == c && b == -d && init.x(0) == -init.x(-2) && init.y(0) == -init.y(-2) &&
           init.x(-1) * init.y(-2) == target && -(init.x(-2) * init.y(-1)) == target;
}

bool check_period4_remark(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& d, const InitialState& init) {
    const Rational one(1);
    return a == one && b == one && c == one && d == Rational(-1) &&
           init.x(0) == -init.x(-2) && init.y(0) == -init.y(-2);
}

std::optional<long> detect_period(const Orbit& orbit, long max_period) {
    if (max_period < 1)
        throw InsufficientWindow("max_period must be >= 1");
    const long count = orbit.last_index() + 3;  // values from n = -2
    if (!orbit.complete() || count < 3 * max_period)
        throw InsufficientWindow("need a complete orbit of at least " +
                                 std::to_string(3 * max_period) + " values, have " +
                                 std::to_string(count));
    for (long p = 1; p <= max_period; ++p) {
        bool periodic = true;
        for (long n = -2; n + p <= orbit.last_index(); ++n) {
            if (orbit.x(n + p) != orbit.x(n) || orbit.y(n + p) != orbit.y(n)) {
                periodic = false;
                break;
            }
        }
        if (periodic)
            return p;
    }
    return std::nullopt;
}

} // namespace rds
