#include "metaspec/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

namespace metaspec {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw ValidationError("floor_div: division by zero");
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer floor_rational(const Rational& r) {
  return floor_div(rational_num(r), rational_den(r));
}

bool is_integer(const Rational& r) { return rational_den(r) == 1; }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw ValidationError("rational_from_double: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  // 53 doublings make the mantissa an exact integer.
  auto mant_int = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(mant_int);
  if (exp >= 0) {
    r *= Rational(Integer(1) << exp);
  } else {
    r /= Rational(Integer(1) << (-exp));
  }
  return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_to_string(const Rational& r) {
  const Integer num = rational_num(r);
  const Integer den = rational_den(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string integer_to_string(const Integer& n) { return n.str(); }

Rational rational_from_string(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ValidationError("empty rational literal");
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Integer num(s.substr(0, slash));
      Integer den(s.substr(slash + 1));
      if (den == 0) throw ValidationError("rational literal with zero denominator: " + text);
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string whole = s.substr(0, dot);
      std::string frac = s.substr(dot + 1);
      bool negative = !whole.empty() && whole[0] == '-';
      if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
      Integer w(whole);
      Integer scale = 1;
      Integer f = 0;
      for (char c : frac) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ValidationError("bad rational literal: " + text);
        f = f * 10 + (c - '0');
        scale *= 10;
      }
      Rational r(f, scale);
      return negative ? Rational(w) - r : Rational(w) + r;
    }
    return Rational(Integer(s));
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw ValidationError("bad rational literal: " + text);
  }
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace metaspec
