#ifndef METASPEC_RATIONAL_HPP_
#define METASPEC_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "metaspec/errors.hpp"

namespace metaspec {

// All exact arithmetic in the project runs on these two types. Counts grow
// like k^d and overflow 64-bit quickly; coefficients must stay exact for the
// equality tests to be meaningful.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline Integer rational_num(const Rational& r) { return numerator(r); }
inline Integer rational_den(const Rational& r) { return denominator(r); }

// floor(a/b) with sign-correct rounding (cpp_int division truncates).
Integer floor_div(const Integer& a, const Integer& b);

Integer floor_rational(const Rational& r);

bool is_integer(const Rational& r);

// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

double to_double(const Rational& r);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);
std::string integer_to_string(const Integer& n);

// Accepts "p", "p/q", and plain decimal strings like "-1.25" (exact).
Rational rational_from_string(const std::string& text);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace metaspec

#endif  // METASPEC_RATIONAL_HPP_
