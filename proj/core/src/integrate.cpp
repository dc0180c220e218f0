#include "polyform/integrate.hpp"

#include "polyform/chart.hpp"
#include "polyform/errors.hpp"
#include "polyform/linalg.hpp"

namespace polyform {

Rational integrate_simplex(const Form& omega) {
  const int N = omega.ambient_dim();
  const int n = N - 1;
  if (!omega.is_zero() && omega.degree() != n)
    throw DegreeError("integrate_simplex: only n-forms integrate over the n-simplex");

  // Rewrite dx_N occurrences through dx_N = -sum_{j<N} dx_j. dx_N sits last
  // in any index set, so the replacement needs no repositioning sign. After
  // this pass every surviving term is a multiple of dx_1 ^ ... ^ dx_n.
  Form flat(N, n);
  for (const auto& [I, q] : omega.coeffs()) {
    if (!I.contains(N)) {
      flat.add_term(I, q);
      continue;
    }
    IndexSet base = I.without(N);
    for (int j = 1; j < N; ++j) {
      if (base.contains(j)) continue;
      int sgn = merge_sign(base, IndexSet{j});
      flat.add_term(base.with(j), q * Rational(-sgn));
    }
  }

  const IndexSet chart = IndexSet::full(N).without(N);
  Rational total(0);
  for (const auto& [I, q] : flat.coeffs()) {
    if (!(I == chart)) continue;
    for (const auto& [m, c] : q.terms()) {
      Int num(1);
      long total_deg = 0;
      for (int e : m.exponents()) {
        num *= factorial(static_cast<unsigned>(e));
        total_deg += e;
      }
      total += c * Rational(num, factorial(static_cast<unsigned>(n + total_deg)));
    }
  }
  return total;
}

Rational pairing(const Form& a, const Form& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("pairing: ambient dimension mismatch");
  const int n = a.ambient_dim() - 1;
  if (!a.is_zero() && !b.is_zero() && a.degree() + b.degree() != n)
    throw DegreeError("pairing: form degrees must sum to n");
  auto ctx = QuotientContext::simplex(n);
  return integrate_simplex(reduce_mod(wedge(a, b), ctx));
}

GramMatrix gram_matrix(const SpaceBasis& basis) {
  if (basis.context.space() != Space::simplex)
    throw StructureError("gram_matrix: duality pairing is defined on the simplex");
  if (basis.flavor != Flavor::P && basis.flavor != Flavor::Pminus)
    throw StructureError("gram_matrix: expected a P or Pminus basis");
  const int d = basis.dim();
  std::vector<Form> duals;
  duals.reserve(d);
  for (const auto& b : basis.representatives) duals.push_back(duality_map(b));
  GramMatrix M{std::vector<std::vector<Rational>>(
                   d, std::vector<Rational>(d, Rational(0))),
               basis, "pointwise duality"};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      M.entries[i][j] = pairing(basis.representatives[i], duals[j]);
  return M;
}

bool is_positive_definite(const GramMatrix& M) {
  const auto& A = M.entries;
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = i + 1; j < A.size(); ++j)
      if (A[i][j] != A[j][i])
        throw ConsistencyError("is_positive_definite: Gram matrix is not symmetric");
  return is_positive_definite(A);
}

}  // namespace polyform
