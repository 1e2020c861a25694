#pragma once

#include <stdexcept>
#include <string>

namespace rds {

// Base class for every domain error thrown by this library. Anything else
// escaping (std::bad_alloc aside) is a bug.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction of a rational with a zero denominator.
struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero denominator") {}
};

// Division by zero, reciprocal of zero, or 0 raised to a negative power.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// Malformed textual input (rational literals, coefficient files, CLI values).
struct ParseError : Error {
    using Error::Error;
};

// A coefficient that multiplies a denominator (an entry of the a or c
// sequence) was zero.
struct ZeroCoefficient : Error {
    using Error::Error;
};

// Tabulated coefficient lookup past the end of the table.
struct IndexOutOfRange : Error {
    using Error::Error;
};

// A start value was zero; the recurrence and its closed forms need all six
// nonzero.
struct ZeroInitialValue : Error {
    using Error::Error;
};

// Which equation's denominator factor vanished.
enum class ForbiddenReason { XDenominator, YDenominator };

inline const char* reason_name(ForbiddenReason r) {
    return r == ForbiddenReason::XDenominator ? "x" : "y";
}

// The orbit left the domain of the recurrence: at `step` the denominator of
// the indicated component vanished, so no further values exist.
struct ForbiddenSetError : Error {
    long step;
    ForbiddenReason reason;
    ForbiddenSetError(long step_, ForbiddenReason reason_)
        : Error("forbidden set hit at step " + std::to_string(step_) + " (" +
                reason_name(reason_) + " denominator vanished)"),
          step(step_), reason(reason_) {}
};

// A closed-form query addressed an index at or beyond the point where the
// orbit dies. `step` is the step whose denominator vanishes, `block` the
// four-step block index s of the vanishing bracket factor.
struct DenominatorVanished : Error {
    long step;
    ForbiddenReason reason;
    long block;
    DenominatorVanished(long step_, ForbiddenReason reason_, long block_)
        : Error("closed-form denominator vanishes: orbit dies at step " +
                std::to_string(step_) + " (" + reason_name(reason_) +
                " denominator), block s=" + std::to_string(block_)),
          step(step_), reason(reason_), block(block_) {}
};

// Scaling with t = 0 is not a group element.
struct InvalidGroupParameter : Error {
    InvalidGroupParameter() : Error("group parameter t must be nonzero") {}
};

// A periodicity condition that divides by b was asked about with b = 0.
struct ConditionUndefined : Error {
    ConditionUndefined() : Error("periodicity condition undefined for b = 0") {}
};

// detect_period was given an orbit too short for the requested period bound.
struct InsufficientWindow : Error {
    using Error::Error;
};

} // namespace rds
