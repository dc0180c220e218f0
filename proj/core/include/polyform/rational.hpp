#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polyform {

// Arbitrary precision integers and rationals. cpp_rational keeps every value
// in lowest terms with a positive denominator, which is exactly the invariant
// the rest of the library relies on; zero is stored as 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's two-argument constructor rejects negative denominators, so
// all construction from a numerator/denominator pair goes through here.
inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Binomial coefficient with the usual convention that out-of-range k gives 0.
inline Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

// "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace polyform
