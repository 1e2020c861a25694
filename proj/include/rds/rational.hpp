#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

#include "rds/errors.hpp"

namespace rds {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always held in canonical form:
//   - denominator > 0, sign carried on the numerator
//   - gcd(|numerator|, denominator) = 1
//   - zero is uniquely 0/1
// Values are immutable in spirit: every operation returns a fresh canonical
// value, so equality is plain representation equality and values can be
// shared freely across threads.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) { *this = normalize(BigInt(num), BigInt(den)); }

    // Canonicalize an arbitrary num/den pair. Throws ZeroDenominator.
    static Rational normalize(BigInt num, BigInt den);

    // Parse "p/q" or "p", optional leading '-', no whitespace. The result is
    // canonical even if the text is not (e.g. "-4/6" parses to -2/3).
    // Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    BigInt num() const { return numerator(v_); }
    BigInt den() const { return denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    // Multiplicative inverse. Throws DivisionByZero on zero.
    Rational reciprocal() const;

    // Exact integer power, k may be negative. 0^0 = 1 by the empty-product
    // convention; 0^negative throws DivisionByZero.
    Rational pow(long long k) const;

    // Canonical text "p/q" with the denominator always spelled out.
    // parse(str()) round-trips exactly.
    std::string str() const;

    // Lossy conversion for plotting output only.
    double to_double() const { return v_.convert_to<double>(); }

    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace rds
