#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rds/rational.hpp"

namespace rds {

enum class CoeffName { A, B, C, D };

enum class CoeffKind {
    Constant,   // one value per sequence, served at every index
    Periodic,   // index n reads list[n mod p]
    Tabulated,  // finite table; reading past the end is an error
};

// The four coefficient sequences (a_n), (b_n), (c_n), (d_n) of the recurrence
//   x[n+1] = x[n-2] y[n-1] / (y[n] (a[n] + b[n] x[n-2] y[n-1]))
//   y[n+1] = y[n-2] x[n-1] / (x[n] (c[n] + d[n] y[n-2] x[n-1]))
// a and c multiply denominators on their own and must be nonzero everywhere;
// b and d may vanish (the recurrence then degenerates to a linear-fractional
// form but stays well defined).
class CoefficientSpec {
public:
    static CoefficientSpec constant(Rational a, Rational b, Rational c, Rational d);
    static CoefficientSpec periodic(std::vector<Rational> a, std::vector<Rational> b,
                                    std::vector<Rational> c, std::vector<Rational> d);
    static CoefficientSpec tabulated(std::vector<Rational> a, std::vector<Rational> b,
                                     std::vector<Rational> c, std::vector<Rational> d);

    CoeffKind kind() const { return kind_; }

    // Period for Periodic, table length for Tabulated, 1 for Constant.
    long length() const { return static_cast<long>(seq_[0].size()); }

    // Value of the named sequence at index n >= 0.
    // Throws IndexOutOfRange for a Tabulated spec with n >= length().
    const Rational& at(CoeffName which, long n) const;

    // The underlying list (length 1 / p / L depending on kind).
    const std::vector<Rational>& list(CoeffName which) const {
        return seq_[static_cast<int>(which)];
    }

private:
    CoefficientSpec(CoeffKind kind, std::array<std::vector<Rational>, 4> seq);
    CoeffKind kind_;
    std::array<std::vector<Rational>, 4> seq_;  // indexed by CoeffName
};

// If every index would read the same four values (Constant, or Periodic or
// Tabulated lists that are all constant), return them as (a, b, c, d).
std::optional<std::array<Rational, 4>> constant_values(const CoefficientSpec& spec);

// Parse the line-based coefficient file format:
//   a: 1/2              constant
//   a: 1,2,3,4 @period  periodic with the list as one period
//   a: 1,2,3 @table     tabulated (indices past the table are an error)
// All four of a, b, c, d must appear, with one kind shared by all four lines;
// '#' starts a comment. Throws ParseError / ZeroCoefficient.
CoefficientSpec parse_coefficient_file(std::istream& in);
CoefficientSpec parse_coefficient_text(const std::string& text);

} // namespace rds
