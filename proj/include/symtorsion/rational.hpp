#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace symt {

// Arbitrary-precision rationals; every exact coefficient and weight in the
// library is one of these.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

// Accepts "p", "-p", "+p" and "p/q" with decimal digits. Throws
// std::invalid_argument on anything else (including q = 0).
Rational parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q" in
// lowest terms with the sign on the numerator.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return q.sign(); }

}  // namespace symt
