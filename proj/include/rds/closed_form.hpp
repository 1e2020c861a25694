#pragma once

#include <utility>

#include "rds/coefficients.hpp"
#include "rds/orbit.hpp"
#include "rds/rational.hpp"

namespace rds {

enum class Component { X, Y };

// Which family of explicit formulas evaluates the query: the fully general
// nonautonomous one, the constant-coefficient specialization, or the
// period-4-coefficient specialization.
enum class Branch { General, Constant, Period4 };

// Addresses solution index 4n + j. For n = 0 and j in {-2, -1, 0} the result
// is the corresponding start value; (n=0, j=1) is the first computed pair.
struct ClosedFormQuery {
    Branch branch = Branch::General;
    int j = 0;  // residue, one of {-2, -1, 0, 1}
    long n = 0; // block count, n >= 0
    Component component = Component::X;
};

inline long solution_index(const ClosedFormQuery& q) { return 4 * q.n + q.j; }

// Inverse of solution_index: m = 4n + j with j in {-2..1}, n = (m - j)/4.
std::pair<long, int> split_index(long m);

// A choice of (a, b, c, d) from {+1, -1}^4.
struct SignPattern {
    int a = 1, b = 1, c = 1, d = 1;
};

// Evaluate the explicit solution for arbitrary coefficient sequences. The
// products and sums are accumulated term by term from coeff lookups; empty
// products are 1 and empty sums 0, so n = 0 reduces to the start values.
// Throws DenominatorVanished if and only if direct iteration would hit the
// forbidden set at or before index 4n + j (for either component: a query is
// only meaningful while the whole system is alive).
Rational closed_general(const CoefficientSpec& spec, const InitialState& init,
                        const ClosedFormQuery& q);

// Specialization for constant coefficients: the products collapse to powers
// (ac)^s and the sums to geometric sums, evaluated as such (a distinct route
// from closed_general, which the tests cross-check). a and c must be nonzero.
Rational closed_constant(const Rational& a, const Rational& b, const Rational& c,
                         const Rational& d, const InitialState& init,
                         const ClosedFormQuery& q);

// The sixteen all-signs cases. The two patterns (1,1,1,1) and (1,-1,1,-1)
// evaluate their fully simplified forms, where every bracket is affine in the
// block index (1 + 2s * product, 1 + (2s+1) * product, and the same with
// minus); the other fourteen substitute into closed_constant.
Rational closed_unit(const SignPattern& pattern, const InitialState& init,
                     const ClosedFormQuery& q);

// Specialization for coefficient sequences of period 4: every coefficient
// subscript collapses mod 4, the products to powers of a fixed two-term
// product, the sums to geometric sums. spec must be Periodic with period 4.
Rational closed_period4(const CoefficientSpec& spec, const InitialState& init,
                        const ClosedFormQuery& q);

} // namespace rds
