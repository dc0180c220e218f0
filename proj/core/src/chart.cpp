#include "polyform/chart.hpp"

#include <optional>

#include "polyform/errors.hpp"
#include "polyform/linalg.hpp"

namespace polyform {

namespace {

Monomial index_monomial(int N, const IndexSet& I) {
  std::vector<int> exps(N, 0);
  for (int i : I.indices()) exps[i - 1] = 1;
  return Monomial(exps);
}

// Smallest-degree tau with bubble * tau congruent to comp modulo the sphere
// ideal, where comp is a single parity component; the slot parity is the
// component's parity flipped in every coordinate, because the bubble flips
// all of them. Returns nullopt when no solution exists up to dmax.
std::optional<Form> solve_bubble_component(const QuotientContext& sph, const Form& comp,
                                           uint32_t grade, int dmax) {
  const int N = sph.nvars();
  const int k = comp.degree();
  const uint32_t slot_grade = grade ^ IndexSet::full(N).bits();
  const Polynomial bub = bubble(N);
  const Form target = ideal_normal_form(comp, sph);
  if (target.is_zero()) return Form(N, k);
  FormIndexer ix;
  Eliminator elim;
  std::vector<std::pair<IndexSet, Monomial>> slots;
  const SparseVec tv = ix.to_sparse(target);
  const auto sets = index_sets(N, k);
  for (int d = 0; d <= dmax; ++d) {
    for (const IndexSet& I : sets) {
      for (const Monomial& m : monomials_of_degree(N, d)) {
        if (term_grade(m, I) != slot_grade) continue;
        const Form image = Form::monomial_form(m, 1, I) * bub;
        elim.add_row(ix.to_sparse(ideal_normal_form(image, sph)));
        slots.emplace_back(I, m);
      }
    }
    std::map<int, Rational> combo;
    if (!elim.reduce(tv, &combo).empty()) continue;
    Form out(N, k);
    for (const auto& [j, c] : combo) out.add_term(slots[j].first, slots[j].second, c);
    return out;
  }
  return std::nullopt;
}

}  // namespace

Form phi_pullback(const Form& a) {
  const int N = a.ambient_dim();
  const int k = a.degree();
  const Rational scale(Int(1) << k);
  Form out(N, k);
  for (const auto& [I, r] : a.coeffs()) {
    const Polynomial factor = Polynomial::term(index_monomial(N, I), scale);
    out.add_term(I, r.substitute_squares() * factor);
  }
  return out;
}

Form phi_pushdown(const Form& alpha) {
  const int N = alpha.ambient_dim();
  const int k = alpha.degree();
  const Rational scale = make_rational(1, Int(1) << k);
  // All divisibility failures are diagnosed before any parity failure, so the
  // error kind is deterministic whichever term is bad.
  for (const auto& [I, q] : alpha.coeffs()) {
    if (!q.divisible_by(index_monomial(N, I)))
      throw StructureError(
          "phi_pushdown: coefficient is not divisible by its index monomial, "
          "so the input is not a pullback image");
  }
  Form out(N, k);
  for (const auto& [I, q] : alpha.coeffs()) {
    const Polynomial quotient = q.divide_exact(index_monomial(N, I));
    out.add_term(I, quotient.halve_exponents() * scale);
  }
  return out;
}

Form hodge_sphere(const Form& alpha) {
  return hodge_euclid(wedge(conormal(alpha.ambient_dim()), alpha));
}

Form duality_map(const Form& a, bool inverse) {
  const int N = a.ambient_dim();
  const int n = N - 1;
  if (n < 1) throw DimensionError("duality needs ambient dimension at least 2");
  if (a.degree() > n)
    throw DegreeError("duality input degree exceeds the manifold dimension");
  const auto sph = QuotientContext::sphere(n);
  const Rational orient = simplex_orientation_sign(n);

  if (!inverse) {
    const Form alpha = phi_pullback(a);
    const Form sigma = hodge_sphere(alpha);
    const Form sigma_min = minimal_representative(sigma, sph, /*keep_input_on_tie=*/true);
    const Form beta = sigma_min * bubble(N);
    return phi_pushdown(beta) * orient;
  }

  const int kb = a.degree();
  const Form beta = phi_pullback(a);
  if (beta.is_zero()) return Form(N, n - kb);
  Form tau(N, kb);
  const int dmax = beta.poly_degree() + 2;
  for (const auto& [g, comp] : grade_split(beta)) {
    auto part = solve_bubble_component(sph, comp, g, dmax);
    if (!part)
      throw StructureError(
          "no bubble factorization exists: input is not in the advertised space");
    tau = tau + *part;
  }
  const int ka = n - kb;
  const Rational star_sign = (kb * ka) % 2 ? Rational(-1) : Rational(1);
  const Form alpha = hodge_sphere(tau) * star_sign;
  return phi_pushdown(reduce_mod(alpha, sph)) * orient;
}

}  // namespace polyform
