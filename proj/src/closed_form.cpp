#include "rds/closed_form.hpp"

#include <array>
#include <vector>

namespace rds {

std::pair<long, int> split_index(long m) {
    if (m < -2)
        throw Error("solution index must be >= -2");
    const int j = static_cast<int>((m + 2) % 4) - 2;
    return {(m - j) / 4, j};
}

namespace {

// The eight bracket families appearing in the explicit solutions. Each value
// at block s is a nonzero product of start values times an invariant slot:
//   XU0(s) = x[-2]y[-1] U[4s]     XV1(s) = x[0]y[-1] V[4s+1]
//   XU2(s) = x[-1]y[-2] U[4s+2]   XV3(s) = x[-1]y[0] V[4s+3]
//   YV0(s) = x[-1]y[-2] V[4s]     YU1(s) = x[-1]y[0] U[4s+1]
//   YV2(s) = x[-2]y[-1] V[4s+2]   YU3(s) = x[0]y[-1] U[4s+3]
// so a vanishing bracket is exactly a forbidden-set hit, which the liveness
// guard below rules out before any evaluation divides by one.
enum Fam { XU0, XV1, XU2, XV3, YV0, YU1, YV2, YU3 };

// Every family has the shape  alpha * P(s) + (beta * P(s) + S(s)) * pi  where
// (P, S) is the product/sum pair of the four-step affine closed form on one
// side (U or V) at one residue, pi is a product of two start values, and
// alpha, beta absorb the step-0 and step-1 coefficients entering through the
// derived seed slots U[2], U[3], V[2], V[3].
struct FamilyShape {
    bool u_side;
    int residue;
    Rational alpha, beta, pi;
};

class BracketProvider {
public:
    virtual ~BracketProvider() = default;
    virtual Rational at(Fam f, long s) const = 0;
};

std::array<FamilyShape, 8> family_shapes(const InitialState& init, const Rational& a0,
                                         const Rational& b0, const Rational& c0,
                                         const Rational& d0, const Rational& a1,
                                         const Rational& b1, const Rational& c1,
                                         const Rational& d1) {
    const Rational one(1), zero(0);
    std::array<FamilyShape, 8> shapes;
    shapes[XU0] = {true, 0, one, zero, init.x(-2) * init.y(-1)};
    shapes[XV1] = {false, 1, one, zero, init.x(0) * init.y(-1)};
    shapes[XU2] = {true, 2, c0, d0, init.x(-1) * init.y(-2)};
    shapes[XV3] = {false, 3, a1, b1, init.x(-1) * init.y(0)};
    shapes[YV0] = {false, 0, one, zero, init.x(-1) * init.y(-2)};
    shapes[YU1] = {true, 1, one, zero, init.x(-1) * init.y(0)};
    shapes[YV2] = {false, 2, a0, b0, init.x(-2) * init.y(-1)};
    shapes[YU3] = {true, 3, c1, d1, init.x(0) * init.y(-1)};
    return shapes;
}

Rational bracket_value(const FamilyShape& f, const Rational& p, const Rational& s) {
    return f.alpha * p + (f.beta * p + s) * f.pi;
}

// Fully general coefficients: running products and sums per side and residue,
// P(s+1) = P(s) q_s and S(s+1) = q_s S(s) + t_s, built up front through block
// s_max.
class GeneralBrackets final : public BracketProvider {
public:
    GeneralBrackets(const CoefficientSpec& spec, const InitialState& init, long s_max)
        : shapes_(family_shapes(init, spec.at(CoeffName::A, 0), spec.at(CoeffName::B, 0),
                                spec.at(CoeffName::C, 0), spec.at(CoeffName::D, 0),
                                spec.at(CoeffName::A, 1), spec.at(CoeffName::B, 1),
                                spec.at(CoeffName::C, 1), spec.at(CoeffName::D, 1))) {
        for (int r = 0; r < 4; ++r) {
            auto& u = u_[r];
            auto& v = v_[r];
            u.p = {Rational(1)};
            u.s = {Rational(0)};
            v.p = {Rational(1)};
            v.s = {Rational(0)};
            for (long k = 0; k < s_max; ++k) {
                const long base = 4 * k + r;
                const Rational& ak = spec.at(CoeffName::A, base);
                const Rational& bk = spec.at(CoeffName::B, base);
                const Rational& ck = spec.at(CoeffName::C, base);
                const Rational& dk = spec.at(CoeffName::D, base);
                const Rational& ak2 = spec.at(CoeffName::A, base + 2);
                const Rational& bk2 = spec.at(CoeffName::B, base + 2);
                const Rational& ck2 = spec.at(CoeffName::C, base + 2);
                const Rational& dk2 = spec.at(CoeffName::D, base + 2);
                const Rational qu = ak * ck2;
                const Rational tu = bk * ck2 + dk2;
                const Rational qv = ak2 * ck;
                const Rational tv = ak2 * dk + bk2;
                u.p.push_back(u.p.back() * qu);
                u.s.push_back(qu * u.s.back() + tu);
                v.p.push_back(v.p.back() * qv);
                v.s.push_back(qv * v.s.back() + tv);
            }
        }
    }

    Rational at(Fam f, long s) const override {
        const FamilyShape& shape = shapes_[static_cast<size_t>(f)];
        const auto& side = shape.u_side ? u_[shape.residue] : v_[shape.residue];
        return bracket_value(shape, side.p[static_cast<size_t>(s)],
                             side.s[static_cast<size_t>(s)]);
    }

private:
    struct Running {
        std::vector<Rational> p, s;
    };
    std::array<FamilyShape, 8> shapes_;
    Running u_[4], v_[4];
};

// sum_{l=0}^{s-1} r^l, as a closed geometric form.
Rational geometric_sum(const Rational& r, long s) {
    const Rational one(1);
    if (r == one)
        return Rational(s);
    return (r.pow(s) - one) / (r - one);
}

// Constant coefficients: for every residue the product ratio is ac and the
// sum term is fixed, so P(s) = (ac)^s and S(s) is a geometric sum.
class ConstantBrackets final : public BracketProvider {
public:
    ConstantBrackets(const Rational& a, const Rational& b, const Rational& c,
                     const Rational& d, const InitialState& init)
        : shapes_(family_shapes(init, a, b, c, d, a, b, c, d)),
          ratio_(a * c), tau_u_(b * c + d), tau_v_(a * d + b) {}

    Rational at(Fam f, long s) const override {
        const FamilyShape& shape = shapes_[static_cast<size_t>(f)];
        const Rational p = ratio_.pow(s);
        const Rational sum = (shape.u_side ? tau_u_ : tau_v_) * geometric_sum(ratio_, s);
        return bracket_value(shape, p, sum);
    }

private:
    std::array<FamilyShape, 8> shapes_;
    Rational ratio_, tau_u_, tau_v_;
};

// Period-4 coefficients: subscripts collapse mod 4, so each (side, residue)
// pair has its own fixed ratio and sum term.
class Period4Brackets final : public BracketProvider {
public:
    Period4Brackets(const CoefficientSpec& spec, const InitialState& init)
        : shapes_(family_shapes(init, spec.at(CoeffName::A, 0), spec.at(CoeffName::B, 0),
                                spec.at(CoeffName::C, 0), spec.at(CoeffName::D, 0),
                                spec.at(CoeffName::A, 1), spec.at(CoeffName::B, 1),
                                spec.at(CoeffName::C, 1), spec.at(CoeffName::D, 1))) {
        const auto& a = spec.list(CoeffName::A);
        const auto& b = spec.list(CoeffName::B);
        const auto& c = spec.list(CoeffName::C);
        const auto& d = spec.list(CoeffName::D);
        for (size_t r = 0; r < 4; ++r) {
            const size_t r2 = (r + 2) % 4;
            ratio_u_[r] = a[r] * c[r2];
            tau_u_[r] = b[r] * c[r2] + d[r2];
            ratio_v_[r] = a[r2] * c[r];
            tau_v_[r] = a[r2] * d[r] + b[r2];
        }
    }

    Rational at(Fam f, long s) const override {
        const FamilyShape& shape = shapes_[static_cast<size_t>(f)];
        const size_t r = static_cast<size_t>(shape.residue);
        const Rational& ratio = shape.u_side ? ratio_u_[r] : ratio_v_[r];
        const Rational& tau = shape.u_side ? tau_u_[r] : tau_v_[r];
        return bracket_value(shape, ratio.pow(s), tau * geometric_sum(ratio, s));
    }

private:
    std::array<FamilyShape, 8> shapes_;
    std::array<Rational, 4> ratio_u_, tau_u_, ratio_v_, tau_v_;
};

// The two fully simplified sign cases a = c = 1, b = d = sign: every bracket
// is affine in the block index, 1 + sign*2s*pi for the plain families and
// 1 + sign*(2s+1)*pi for the ones carrying a step-0/1 coefficient.
class UnitBrackets final : public BracketProvider {
public:
    UnitBrackets(int sign, const InitialState& init)
        : shapes_(family_shapes(init, Rational(1), Rational(sign), Rational(1),
                                Rational(sign), Rational(1), Rational(sign), Rational(1),
                                Rational(sign))),
          sign_(sign) {}

    Rational at(Fam f, long s) const override {
        const FamilyShape& shape = shapes_[static_cast<size_t>(f)];
        const bool offset = !shape.beta.is_zero();  // XU2, XV3, YV2, YU3
        const long count = 2 * s + (offset ? 1 : 0);
        return Rational(1) + Rational(sign_) * Rational(count) * shape.pi;
    }

private:
    std::array<FamilyShape, 8> shapes_;
    int sign_;
};

// Raise DenominatorVanished if iteration from init would die at or before
// index m. Runs the total affine slot recurrences, under which the step-k
// denominators of the recurrence are V[k+2]/U[k] and U[k+2]/V[k]; the first
// vanishing slot is the death step. Checking slots 2 .. m+1 covers every
// bracket any branch divides by (largest slot used is m+1).
void require_alive_through(const CoefficientSpec& spec, const InitialState& init, long m) {
    if (m <= 0)
        return;
    Rational u_even = (init.x(-2) * init.y(-1)).reciprocal();
    Rational u_odd = (init.x(-1) * init.y(0)).reciprocal();
    Rational v_even = (init.x(-1) * init.y(-2)).reciprocal();
    Rational v_odd = (init.x(0) * init.y(-1)).reciprocal();
    for (long k = 0; k < m; ++k) {
        Rational& u_k = (k % 2 == 0) ? u_even : u_odd;
        Rational& v_k = (k % 2 == 0) ? v_even : v_odd;
        const Rational v_next = spec.at(CoeffName::A, k) * u_k + spec.at(CoeffName::B, k);
        const Rational u_next = spec.at(CoeffName::C, k) * v_k + spec.at(CoeffName::D, k);
        if (v_next.is_zero())
            throw DenominatorVanished(k, ForbiddenReason::XDenominator, (k + 2) / 4);
        if (u_next.is_zero())
            throw DenominatorVanished(k, ForbiddenReason::YDenominator, (k + 2) / 4);
        u_k = u_next;  // slot k+2 replaces slot k of the same parity
        v_k = v_next;
    }
}

void validate_query(const ClosedFormQuery& q) {
    if (q.j < -2 || q.j > 1)
        throw Error("closed-form residue j must be in -2..1");
    if (q.n < 0)
        throw Error("closed-form block n must be >= 0");
}

// Shared assembly: prefactor times the product of bracket ratios for
// s = 0 .. n-1. a0, b0, c0, d0 are the step-0 coefficients entering the
// j = 1 prefactors.
Rational assemble(const ClosedFormQuery& q, const BracketProvider& brackets,
                  const InitialState& init, const Rational& a0, const Rational& b0,
                  const Rational& c0, const Rational& d0) {
    const long n = q.n;
    const bool is_x = q.component == Component::X;
    const Rational& xm2 = init.x(-2);
    const Rational& xm1 = init.x(-1);
    const Rational& xz = init.x(0);
    const Rational& ym2 = init.y(-2);
    const Rational& ym1 = init.y(-1);
    const Rational& yz = init.y(0);

    Rational pref;
    Rational prod(1);
    switch (q.j) {
    case -2:
        if (is_x) {
            pref = xz.pow(n) * yz.pow(n) / (xm2.pow(n - 1) * ym2.pow(n));
            for (long s = 0; s < n; ++s)
                prod *= brackets.at(XU0, s) * brackets.at(XU2, s) /
                        (brackets.at(XV1, s) * brackets.at(XV3, s));
        } else {
            pref = xz.pow(n) * yz.pow(n) / (xm2.pow(n) * ym2.pow(n - 1));
            for (long s = 0; s < n; ++s)
                prod *= brackets.at(YV0, s) * brackets.at(YV2, s) /
                        (brackets.at(YU1, s) * brackets.at(YU3, s));
        }
        break;
    case -1:
        if (is_x) {
            pref = xm1 * xm2.pow(n) * ym2.pow(n) / (xz.pow(n) * yz.pow(n));
            for (long s = 0; s < n; ++s)
                prod *= brackets.at(YU1, s) * brackets.at(YU3, s) /
                        (brackets.at(YV2, s) * brackets.at(YV0, s + 1));
        } else {
            pref = ym1 * xm2.pow(n) * ym2.pow(n) / (xz.pow(n) * yz.pow(n));
            for (long s = 0; s < n; ++s)
                prod *= brackets.at(XV1, s) * brackets.at(XV3, s) /
                        (brackets.at(XU2, s) * brackets.at(XU0, s + 1));
        }
        break;
    case 0:
        if (is_x) {
            pref = xz.pow(n + 1) * yz.pow(n) / (xm2.pow(n) * ym2.pow(n));
            for (long s = 0; s < n; ++s)
                prod *= brackets.at(XU2, s) * brackets.at(XU0, s + 1) /
                        (brackets.at(XV3, s) * brackets.at(XV1, s + 1));
        } else {
            pref = xz.pow(n) * yz.pow(n + 1) / (xm2.pow(n) * ym2.pow(n));
            for (long s = 0; s < n; ++s)
                prod *= brackets.at(YV2, s) * brackets.at(YV0, s + 1) /
                        (brackets.at(YU3, s) * brackets.at(YU1, s + 1));
        }
        break;
    default:  // j == 1
        if (is_x) {
            pref = xm2.pow(n + 1) * ym2.pow(n) * ym1 /
                   (xz.pow(n) * yz.pow(n + 1) * (a0 + b0 * xm2 * ym1));
            for (long s = 0; s < n; ++s)
                prod *= brackets.at(YU3, s) * brackets.at(YU1, s + 1) /
                        (brackets.at(YV0, s + 1) * brackets.at(YV2, s + 1));
        } else {
            pref = xm2.pow(n) * ym2.pow(n + 1) * xm1 /
                   (xz.pow(n + 1) * yz.pow(n) * (c0 + d0 * xm1 * ym2));
            for (long s = 0; s < n; ++s)
                prod *= brackets.at(XV3, s) * brackets.at(XV1, s + 1) /
                        (brackets.at(XU0, s + 1) * brackets.at(XU2, s + 1));
        }
        break;
    }
    return pref * prod;
}

// Largest block any bracket of the branch is evaluated at.
long max_block(const ClosedFormQuery& q) {
    if (q.n == 0)
        return -1;
    return q.j == -2 ? q.n - 1 : q.n;
}

} // namespace

Rational closed_general(const CoefficientSpec& spec, const InitialState& init,
                        const ClosedFormQuery& q) {
    validate_query(q);
    require_alive_through(spec, init, solution_index(q));
    const GeneralBrackets brackets(spec, init, max_block(q));
    return assemble(q, brackets, init, spec.at(CoeffName::A, 0), spec.at(CoeffName::B, 0),
                    spec.at(CoeffName::C, 0), spec.at(CoeffName::D, 0));
}

Rational closed_constant(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d, const InitialState& init,
                         const ClosedFormQuery& q) {
    validate_query(q);
    const CoefficientSpec spec = CoefficientSpec::constant(a, b, c, d);  // checks a, c
    require_alive_through(spec, init, solution_index(q));
    const ConstantBrackets brackets(a, b, c, d, init);
    return assemble(q, brackets, init, a, b, c, d);
}

Rational closed_unit(const SignPattern& pattern, const InitialState& init,
                     const ClosedFormQuery& q) {
    for (int v : {pattern.a, pattern.b, pattern.c, pattern.d}) {
        if (v != 1 && v != -1)
            throw Error("sign pattern entries must be +1 or -1");
    }
    const bool plain = pattern.a == 1 && pattern.c == 1;
    if (plain && (pattern.b == pattern.d)) {
        // (1, 1, 1, 1) or (1, -1, 1, -1): the fully simplified forms.
        validate_query(q);
        const int sign = pattern.b;
        const Rational one(1), sd(sign);
        require_alive_through(CoefficientSpec::constant(one, sd, one, sd), init,
                              solution_index(q));
        const UnitBrackets brackets(sign, init);
        return assemble(q, brackets, init, one, sd, one, sd);
    }
    return closed_constant(Rational(pattern.a), Rational(pattern.b), Rational(pattern.c),
                           Rational(pattern.d), init, q);
}

Rational closed_period4(const CoefficientSpec& spec, const InitialState& init,
                        const ClosedFormQuery& q) {
    if (spec.kind() != CoeffKind::Periodic || spec.length() != 4)
        throw Error("closed_period4 needs a Periodic spec with period 4");
    validate_query(q);
    require_alive_through(spec, init, solution_index(q));
    const Period4Brackets brackets(spec, init);
    return assemble(q, brackets, init, spec.at(CoeffName::A, 0), spec.at(CoeffName::B, 0),
                    spec.at(CoeffName::C, 0), spec.at(CoeffName::D, 0));
}

} // namespace rds
