#include "rds/orbit.hpp"

#include <cstdio>
#include <ostream>

namespace rds {

InitialState::InitialState(Rational x_m2, Rational x_m1, Rational x_0,
                           Rational y_m2, Rational y_m1, Rational y_0)
    : xs_{std::move(x_m2), std::move(x_m1), std::move(x_0)},
      ys_{std::move(y_m2), std::move(y_m1), std::move(y_0)} {
    static const char* const names[] = {"x[-2]", "x[-1]", "x[0]",
                                        "y[-2]", "y[-1]", "y[0]"};
    for (int i = 0; i < 3; ++i) {
        if (xs_[static_cast<size_t>(i)].is_zero())
            throw ZeroInitialValue(std::string(names[i]) + " must be nonzero");
        if (ys_[static_cast<size_t>(i)].is_zero())
            throw ZeroInitialValue(std::string(names[i + 3]) + " must be nonzero");
    }
}

std::pair<Rational, Rational> step(const CoefficientSpec& spec,
                                   const Rational& x_nm2, const Rational& x_nm1,
                                   const Rational& x_n, const Rational& y_nm2,
                                   const Rational& y_nm1, const Rational& y_n, long n) {
    const Rational xprod = x_nm2 * y_nm1;
    const Rational yprod = y_nm2 * x_nm1;
    const Rational xden = spec.at(CoeffName::A, n) + spec.at(CoeffName::B, n) * xprod;
    if (xden.is_zero())
        throw ForbiddenSetError(n, ForbiddenReason::XDenominator);
    const Rational yden = spec.at(CoeffName::C, n) + spec.at(CoeffName::D, n) * yprod;
    if (yden.is_zero())
        throw ForbiddenSetError(n, ForbiddenReason::YDenominator);
    return {xprod / (y_n * xden), yprod / (x_n * yden)};
}

Orbit iterate(const CoefficientSpec& spec, const InitialState& init, long steps) {
    Orbit orbit;
    orbit.xs_.reserve(static_cast<size_t>(steps) + 3);
    orbit.ys_.reserve(static_cast<size_t>(steps) + 3);
    for (int n = -2; n <= 0; ++n) {
        orbit.xs_.push_back(init.x(n));
        orbit.ys_.push_back(init.y(n));
    }
    for (long n = 0; n < steps; ++n) {
        const size_t i = static_cast<size_t>(n) + 2;  // slot of index n
        try {
            auto [xn1, yn1] = step(spec, orbit.xs_[i - 2], orbit.xs_[i - 1], orbit.xs_[i],
                                   orbit.ys_[i - 2], orbit.ys_[i - 1], orbit.ys_[i], n);
            orbit.xs_.push_back(std::move(xn1));
            orbit.ys_.push_back(std::move(yn1));
        } catch (const ForbiddenSetError& death) {
            orbit.death_ = {death.step, death.reason};
            break;
        }
    }
    return orbit;
}

void write_csv(std::ostream& os, const Orbit& orbit, bool float_columns) {
    os << (float_columns ? "n,x,y,x_float,y_float\n" : "n,x,y\n");
    char buf[64];
    for (long n = -2; n <= orbit.last_index(); ++n) {
        os << n << ',' << orbit.x(n).str() << ',' << orbit.y(n).str();
        if (float_columns) {
            std::snprintf(buf, sizeof buf, ",%.17g,%.17g", orbit.x(n).to_double(),
                          orbit.y(n).to_double());
            os << buf;
        }
        os << '\n';
    }
    if (orbit.complete())
        os << "# status=complete\n";
    else
        os << "# status=forbidden step=" << orbit.forbidden_step()
           << " eq=" << reason_name(orbit.forbidden_reason()) << '\n';
}

} // namespace rds
