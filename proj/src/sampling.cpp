#include "rds/sampling.hpp"

namespace rds {

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t v = next();
        if (v >= threshold)
            return v % n;
    }
}

std::uint64_t trial_seed(std::uint64_t run_seed, long trial) {
    SplitMix64 mix(run_seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(trial + 1)));
    return mix.next();
}

Rational small_rational(SplitMix64& rng) {
    // numerator in [-9, 9] minus {0}: 18 choices
    const long long num_pick = static_cast<long long>(rng.bounded(18));
    const long long num = num_pick < 9 ? num_pick - 9 : num_pick - 8;
    const long long den = static_cast<long long>(rng.bounded(9)) + 1;
    return Rational(num, den);
}

InitialState random_init(SplitMix64& rng) {
    Rational v[6];
    for (auto& r : v)
        r = small_rational(rng);
    return InitialState(v[0], v[1], v[2], v[3], v[4], v[5]);
}

CoefficientSpec random_constant_spec(SplitMix64& rng) {
    return CoefficientSpec::constant(small_rational(rng), small_rational(rng),
                                     small_rational(rng), small_rational(rng));
}

namespace {

std::vector<Rational> random_list(SplitMix64& rng, long len) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(len));
    for (long i = 0; i < len; ++i)
        out.push_back(small_rational(rng));
    return out;
}

} // namespace

CoefficientSpec random_periodic_spec(SplitMix64& rng, long period) {
    return CoefficientSpec::periodic(random_list(rng, period), random_list(rng, period),
                                     random_list(rng, period), random_list(rng, period));
}

CoefficientSpec random_tabulated_spec(SplitMix64& rng, long length) {
    return CoefficientSpec::tabulated(random_list(rng, length), random_list(rng, length),
                                      random_list(rng, length), random_list(rng, length));
}

Instance live_instance(SplitMix64& rng, CoeffKind kind, long length, long depth) {
    for (;;) {
        CoefficientSpec spec = kind == CoeffKind::Constant ? random_constant_spec(rng)
                               : kind == CoeffKind::Periodic
                                   ? random_periodic_spec(rng, length)
                                   : random_tabulated_spec(rng, length);
        InitialState init = random_init(rng);
        if (iterate(spec, init, depth).complete())
            return {std::move(spec), std::move(init)};
    }
}

InitialState live_init(SplitMix64& rng, const CoefficientSpec& spec, long depth) {
    for (;;) {
        InitialState init = random_init(rng);
        if (iterate(spec, init, depth).complete())
            return init;
    }
}

Instance period2_instance(SplitMix64& rng) {
    for (;;) {
        const Rational a = small_rational(rng);
        if (a == Rational(1))  // (1 - a)/b = 0 would force zero start values
            continue;
        const Rational b = small_rational(rng);
        const Rational x_m2 = small_rational(rng);
        const Rational y_m2 = small_rational(rng);
        const Rational target = (Rational(1) - a) / b;
        // x[-1] y[-2] = x[-2] y[-1] = target, x[0] = x[-2], y[0] = y[-2]
        InitialState init(x_m2, target / y_m2, x_m2, y_m2, target / x_m2, y_m2);
        return {CoefficientSpec::constant(a, b, a, b), std::move(init)};
    }
}

Instance period4_instance(SplitMix64& rng) {
    for (;;) {
        const Rational a = small_rational(rng);
        if (a == Rational(-1))  // (1 + a)/b = 0 would force zero start values
            continue;
        const Rational b = small_rational(rng);
        const Rational x_m2 = small_rational(rng);
        const Rational y_m2 = small_rational(rng);
        const Rational target = (Rational(1) + a) / b;
        // x[-1] y[-2] = -x[-2] y[-1] = target, x[0] = -x[-2], y[0] = -y[-2]
        InitialState init(x_m2, target / y_m2, -x_m2, y_m2, -(target / x_m2), -y_m2);
        return {CoefficientSpec::constant(a, b, a, -b), std::move(init)};
    }
}

Instance remark_instance(SplitMix64& rng, long depth) {
    const Rational one(1);
    const CoefficientSpec spec = CoefficientSpec::constant(one, one, one, Rational(-1));
    for (;;) {
        const Rational x_m2 = small_rational(rng);
        const Rational y_m2 = small_rational(rng);
        InitialState init(x_m2, small_rational(rng), -x_m2, y_m2, small_rational(rng), -y_m2);
        if (iterate(spec, init, depth).complete())
            return {spec, std::move(init)};
    }
}

Instance dead_at_zero_instance(SplitMix64& rng, ForbiddenReason reason) {
    const CoefficientSpec spec = random_constant_spec(rng);
    const Rational& a = spec.list(CoeffName::A)[0];
    const Rational& b = spec.list(CoeffName::B)[0];
    const Rational& c = spec.list(CoeffName::C)[0];
    const Rational& d = spec.list(CoeffName::D)[0];
    Rational v[6];
    for (auto& r : v)
        r = small_rational(rng);
    if (reason == ForbiddenReason::XDenominator) {
        // a + b x[-2] y[-1] = 0
        v[4] = -a / (b * v[0]);
    } else {
        // c + d y[-2] x[-1] = 0
        v[1] = -c / (d * v[3]);
    }
    return {spec, InitialState(v[0], v[1], v[2], v[3], v[4], v[5])};
}

} // namespace rds
