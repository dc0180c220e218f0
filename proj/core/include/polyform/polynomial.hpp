#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "polyform/monomial.hpp"
#include "polyform/rational.hpp"

namespace polyform {

// Parity pattern of an exponent vector: bit i-1 set iff the exponent of
// variable i is odd.
uint32_t parity_mask(const Monomial& m);

// Sparse multivariate polynomial with exact rational coefficients. The term
// map never stores a zero coefficient, and its graded-lex ordering doubles as
// the canonical serialization order, so equal polynomials have identical
// representations. Value type: every operation returns a fresh polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw DimensionError("Polynomial: need at least one variable");
  }

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int var);
  static Polynomial term(const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  Polynomial& add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(int e) const;
  Polynomial derivative(int var) const;
  Polynomial antiderivative(int var) const;
  Rational eval(const std::vector<Rational>& point) const;

  // Replace variable `var` by an arbitrary polynomial in the same variables.
  Polynomial substitute(int var, const Polynomial& value) const;

  // p(x_1..x_m) -> p(u_1^2..u_m^2): doubles every exponent.
  Polynomial substitute_squares() const;

  // Inverse of substitute_squares; throws ParityError on an odd exponent.
  Polynomial halve_exponents() const;

  // Component of each total degree, indexed 0..degree(); empty for zero.
  std::vector<Polynomial> homogeneous_components() const;
  Polynomial homogeneous_component(int d) const;

  // Multiply the degree-j component by (sum of squares)^((s-j)/2) so the whole
  // polynomial becomes homogeneous of degree s; the padding factor is the
  // squared radius, so values on the unit sphere are unchanged. Requires every
  // nonzero component to sit at a degree of the same parity as s.
  Polynomial homogenize_parity(int s) const;

  bool divisible_by(const Monomial& m) const;
  // Exact division by a monomial; the error message names the offending term.
  Polynomial divide_exact(const Monomial& m) const;

  // True when every term's parity pattern equals `mask`.
  bool has_uniform_parity(uint32_t mask) const;

 private:
  void require_same_nvars(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw DimensionError("Polynomial: variable count mismatch");
  }

  int nvars_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Sum of squares of all variables (the squared radius).
Polynomial radius_squared(int nvars);

}  // namespace polyform
