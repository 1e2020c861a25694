#include "rds/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace rds {

Rational Rational::normalize(BigInt num, BigInt den) {
    if (den.is_zero())
        throw ZeroDenominator();
    // cpp_rational's two-argument constructor requires a positive denominator;
    // it then performs the gcd reduction itself.
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(boost::multiprecision::cpp_rational(std::move(num), std::move(den)));
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw DivisionByZero();
    return normalize(den(), num());
}

Rational Rational::pow(long long k) const {
    if (k == 0)
        return Rational(1);
    const Rational base = k > 0 ? *this : reciprocal();  // throws on 0^negative
    unsigned long long e = k > 0 ? static_cast<unsigned long long>(k)
                                 : static_cast<unsigned long long>(-(k + 1)) + 1;
    // num and den are coprime, so their powers are too: no reduction needed.
    return Rational(boost::multiprecision::cpp_rational(
        boost::multiprecision::pow(base.num(), static_cast<unsigned>(e)),
        boost::multiprecision::pow(base.den(), static_cast<unsigned>(e))));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.v_ = -r.v_;
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw DivisionByZero();
    return Rational(a.v_ / b.v_);
}

Rational Rational::parse(std::string_view text) {
    const auto fail = [&] {
        throw ParseError("not a rational: \"" + std::string(text) + "\"");
    };

    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }

    const auto take_digits = [&](std::string_view& sv) -> BigInt {
        size_t i = 0;
        while (i < sv.size() && std::isdigit(static_cast<unsigned char>(sv[i])))
            ++i;
        if (i == 0)
            fail();
        BigInt value(std::string(sv.substr(0, i)));
        sv.remove_prefix(i);
        return value;
    };

    BigInt num = take_digits(rest);
    BigInt den = 1;
    if (!rest.empty()) {
        if (rest.front() != '/')
            fail();
        rest.remove_prefix(1);
        den = take_digits(rest);
        if (!rest.empty())
            fail();
        if (den.is_zero())
            throw ZeroDenominator();
    }
    if (negative)
        num = -num;
    return normalize(std::move(num), std::move(den));
}

// Always prints the denominator, so 1 renders as "1/1". Output is stable
// under parse() and matches the command-line examples byte for byte.
std::string Rational::str() const {
    std::string s = num().str();
    s += '/';
    s += den().str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace rds
