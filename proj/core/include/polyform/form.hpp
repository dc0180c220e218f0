#pragma once

#include <map>
#include <vector>

#include "polyform/indexset.hpp"
#include "polyform/polynomial.hpp"

namespace polyform {

// Parity pattern of one form term c * u^e du_I: bit j-1 is the parity of
// e_j + [j in I]. A term is invariant under the j-th coordinate reflection iff
// bit j-1 is clear. All-zero grade = even term; all-ones grade = odd term.
inline uint32_t term_grade(const Monomial& m, const IndexSet& I) {
  return parity_mask(m) ^ I.bits();
}

// Polynomial differential k-form on R^N, stored as index set -> coefficient
// polynomial. Zero coefficients are never stored, so iteration order
// (IndexSetOrder, then term order inside each Polynomial) doubles as the
// canonical serialization. A form with no terms keeps a nominal degree for
// arithmetic checks, but any two zero forms of the same ambient dimension
// compare equal: zero lives in every degree.
class Form {
 public:
  using CoeffMap = std::map<IndexSet, Polynomial, IndexSetOrder>;

  Form(int ambient_dim, int degree);

  static Form from_scalar(const Polynomial& p);
  static Form monomial_form(const Monomial& m, const Rational& c, const IndexSet& I);
  // du_I with coefficient 1.
  static Form basis_covector(int ambient_dim, const IndexSet& I);

  int ambient_dim() const { return ambient_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Max total degree over all coefficients; -1 for the zero form.
  int poly_degree() const;
  const CoeffMap& coeffs() const { return coeffs_; }
  Polynomial coefficient(const IndexSet& I) const;
  Form& add_term(const IndexSet& I, const Polynomial& p);
  Form& add_term(const IndexSet& I, const Monomial& m, const Rational& c);

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator-() const;
  Form operator*(const Polynomial& p) const;
  Form operator*(const Rational& c) const;
  bool operator==(const Form& o) const {
    return ambient_ == o.ambient_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Form& o) const { return !(*this == o); }

 private:
  int ambient_;
  int degree_;
  CoeffMap coeffs_;
};

inline Form operator*(const Rational& c, const Form& a) { return a * c; }
inline Form operator*(const Polynomial& p, const Form& a) { return a * p; }

// Polynomial vector field on R^N; component(i) multiplies d/du_i.
class PolyVectorField {
 public:
  explicit PolyVectorField(std::vector<Polynomial> components);
  int nvars() const { return static_cast<int>(components_.size()); }
  const Polynomial& component(int i) const { return components_[i - 1]; }

 private:
  std::vector<Polynomial> components_;
};

Form wedge(const Form& a, const Form& b);
Form exterior_derivative(const Form& a);
Form interior_product(const PolyVectorField& V, const Form& a);

// Euclidean Hodge star with the orientation du_1 ^ ... ^ du_N positive, so
// du_I ^ *(du_I) = vol for every I. Applying it twice gives
// (-1)^{k(N-k)} times the identity on k-forms.
Form hodge_euclid(const Form& a);

// Pullback under the i-th coordinate reflection u_i -> -u_i.
Form reflect(int i, const Form& a);

// Terms invariant under every coordinate reflection (grade all-zero), resp.
// negated by every reflection (grade all-ones). Computed termwise; the
// 2^N-fold reflection average gives the same answer and is kept as a test
// oracle only.
Form even_part(const Form& a);
Form odd_part(const Form& a);

// Lie derivative along the radial field, via the Cartan formula
// i_U(da) + d(i_U a). Scales a term of polynomial degree j and form degree k
// by j + k.
Form lie_derivative_radial(const Form& a);

// Split into components of constant term grade, keyed by the grade bits.
// Summing the values gives back the input.
std::map<uint32_t, Form> grade_split(const Form& a);

// The standard geometric objects, all on R^nvars.
PolyVectorField radial_field(int nvars);              // sum u_i d/du_i
PolyVectorField gradient_t(int nvars);                // sum d/du_i
PolyVectorField kappa_field(int nvars);               // sum (x_i - t/nvars) d/dx_i
Form conormal(int nvars);                             // nu = sum u_i du_i
Polynomial bubble(int nvars);                         // u_1 ... u_nvars
Form volume_form(int nvars);                          // du_1 ^ ... ^ du_nvars

// All size-k subsets of {1..n} in IndexSetOrder.
std::vector<IndexSet> index_sets(int n, int k);

// All monomials in nvars variables of total degree exactly d, listed in
// MonomialOrder; the up-to variant concatenates ascending-degree blocks, the
// feed order used when pruning candidate spans.
std::vector<Monomial> monomials_of_degree(int nvars, int d);
std::vector<Monomial> monomials_up_to_degree(int nvars, int d);

}  // namespace polyform
