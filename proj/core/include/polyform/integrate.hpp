#pragma once

#include <string>
#include <vector>

#include "polyform/basis.hpp"

namespace polyform {

// Exact integral of an n-form over the standard n-simplex in R^{n+1},
// through the chart (x_1, ..., x_n) |-> (x_1, ..., x_n, 1 - sum), declared
// positively oriented. Monomials integrate by the factorial identity
//   integral x_1^{a_1} ... x_{n+1}^{a_{n+1}} = a_1! ... a_{n+1}! / (n + |a|)!
// with x_{n+1} kept as an exponent of 1 - sum. Throws on degree mismatch.
Rational integrate_simplex(const Form& omega);

// integral over T^n of a ^ b, reduced modulo the simplex ideal first.
// Requires deg a + deg b = n.
Rational pairing(const Form& a, const Form& b);

struct GramMatrix {
  std::vector<std::vector<Rational>> entries;
  SpaceBasis row_basis;
  std::string map_used;
};

// M_ij = pairing(b_i, dual of b_j). Symmetric for the duality map, which the
// positive-definiteness test insists on.
GramMatrix gram_matrix(const SpaceBasis& basis);

bool is_positive_definite(const GramMatrix& M);

}  // namespace polyform
