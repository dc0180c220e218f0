#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polyform/basis.hpp"
#include "polyform/chart.hpp"
#include "polyform/context.hpp"

using namespace polyform;

namespace {
Form dU(int nvars, std::initializer_list<int> idx) {
  return Form::basis_covector(nvars, IndexSet(idx));
}
Polynomial U(int nvars, int var) { return Polynomial::variable(nvars, var); }
}  // namespace

TEST_CASE("reduction modulo the quotient ideals") {
  auto sph1 = QuotientContext::sphere(1);
  // u du + v dv lies in the ideal, so v dv rewrites to -u du.
  CHECK(reduce_mod(U(2, 2) * dU(2, {2}), sph1) == -(U(2, 1) * dU(2, {1})));

  auto simp2 = QuotientContext::simplex(2);
  Polynomial sum_minus_one =
      U(3, 1) + U(3, 2) + U(3, 3) - Polynomial::constant(3, 1);
  CHECK(reduce_mod(Form::from_scalar(sum_minus_one), simp2).is_zero());

  // Ambient context never rewrites anything.
  auto amb = QuotientContext::ambient(2);
  std::mt19937 rng(71);
  for (int t = 0; t < 10; ++t) {
    Form a = oracles::random_form(rng, 3, 1, 3);
    CHECK(reduce_mod(a, amb) == a);
    // Idempotence on both quotients.
    auto sph2 = QuotientContext::sphere(2);
    CHECK(reduce_mod(reduce_mod(a, sph2), sph2) == reduce_mod(a, sph2));
    CHECK(reduce_mod(reduce_mod(a, simp2), simp2) == reduce_mod(a, simp2));
    // The reduction changes nothing as a class: equal_mod agrees.
    CHECK(equal_mod(a, reduce_mod(a, sph2), sph2));
  }
}

TEST_CASE("symbolic zero tests on the manifolds") {
  auto sph2 = QuotientContext::sphere(2);
  CHECK(is_zero_on(conormal(3), sph2));
  CHECK(is_zero_on(
      Form::from_scalar(radius_squared(3) - Polynomial::constant(3, 1)), sph2));
  CHECK_FALSE(is_zero_on(dU(3, {1}), sph2));

  auto simp1 = QuotientContext::simplex(1);
  CHECK(is_zero_on(
      Form::from_scalar(U(2, 1) + U(2, 2) - Polynomial::constant(2, 1)), simp1));

  // Every verdict above also ran the pointwise cross-check.
  auto stats = zero_check_stats();
  CHECK(stats.agreements > 0);
  CHECK(stats.disagreements == 0);
}

TEST_CASE("full polynomial spaces") {
  CHECK(basis_P(1, 0, 1, QuotientContext::ambient(1)).dim() == 2);
  CHECK(basis_P(2, 1, 1, QuotientContext::simplex(2)).dim() == 6);
  CHECK(basis_P(2, 1, 0, QuotientContext::simplex(2)).dim() == 3);

  // Classical binomial dimensions, ambient and simplex.
  for (int r = 0; r <= 3; ++r)
    for (int k = 0; k <= 2; ++k) {
      auto simp = QuotientContext::simplex(2);
      CHECK(basis_P(2, r, k, simp).dim() ==
            classical_dim(Flavor::P, simp, 2, r, k));
    }
  CHECK_THROWS_AS(basis_P(2, -1, 1, QuotientContext::simplex(2)), Error);
  CHECK_THROWS_AS(basis_P(2, 1, 4, QuotientContext::simplex(2)), Error);
}

TEST_CASE("trimmed spaces as contraction images") {
  auto amb1 = QuotientContext::ambient(1);
  auto pm = basis_Pminus(1, 1, 1, amb1);
  REQUIRE(pm.dim() == 1);
  Form witness = U(2, 1) * dU(2, {2}) - U(2, 2) * dU(2, {1});
  CHECK(membership(witness, pm).has_value());

  CHECK(basis_Pminus(2, 1, 1, QuotientContext::simplex(2)).dim() == 3);
  CHECK(basis_Pminus(2, 1, 3, QuotientContext::ambient(2)).dim() == 0);

  // Whitney dimension on the simplex.
  auto simp2 = QuotientContext::simplex(2);
  for (int r = 1; r <= 3; ++r)
    for (int k = 0; k <= 2; ++k)
      CHECK(basis_Pminus(2, r, k, simp2).dim() ==
            classical_dim(Flavor::Pminus, simp2, 2, r, k));

  // Nesting: P_r^- inside P_r inside P_{r+1}^-.
  for (int r = 1; r <= 2; ++r)
    for (int k = 0; k <= 2; ++k) {
      auto minus = basis_Pminus(2, r, k, simp2);
      auto full = basis_P(2, r, k, simp2);
      auto next = basis_Pminus(2, r + 1, k, simp2);
      for (const auto& b : minus.representatives)
        CHECK(membership(b, full).has_value());
      for (const auto& b : full.representatives)
        CHECK(membership(b, next).has_value());
    }
}

TEST_CASE("geometric decomposition flavor agrees with the contraction image") {
  for (auto [n, r, k] : {std::array<int, 3>{2, 1, 1}, {1, 2, 0}, {3, 2, 2}}) {
    auto ctx = QuotientContext::simplex(n);
    CHECK(equal_spans(basis_Pminus_afw(n, r, k, ctx), basis_Pminus(n, r, k, ctx)));
  }
  CHECK_THROWS_AS(basis_Pminus_afw(2, 1, 1, QuotientContext::sphere(2)),
                  StructureError);
}

TEST_CASE("trace-zero spaces on the simplex") {
  Form xydz = U(3, 1) * U(3, 2) * dU(3, {3});
  CHECK(membership(xydz, basis_ring(2, 2, 1)).has_value());

  Form dual_ydy = U(3, 1) * U(3, 2).pow(2) * dU(3, {3}) -
                  U(3, 2).pow(2) * U(3, 3) * dU(3, {1});
  CHECK(membership(dual_ydy, basis_ring_minus(2, 3, 1)).has_value());

  CHECK(basis_ring(1, 1, 0).dim() == 0);

  // Every representative traces to zero on every face.
  for (int k = 0; k <= 2; ++k)
    for (int r = 1; r <= 3; ++r)
      for (const auto& b : basis_ring(2, r, k).representatives)
        for (int i = 1; i <= 3; ++i) CHECK(trace_to_face(b, i).is_zero());

  CHECK_THROWS_AS(make_basis(2, 2, 1, Flavor::ring_P, QuotientContext::sphere(2)),
                  StructureError);
}

TEST_CASE("traces onto faces") {
  CHECK(trace_to_face(U(3, 2) * dU(3, {2}), 2).is_zero());
  Form xydz = U(3, 1) * U(3, 2) * dU(3, {3});
  for (int i = 1; i <= 3; ++i) CHECK(trace_to_face(xydz, i).is_zero());

  // x dy on the face z = 0 becomes (1 - y) dy in the face's own coordinates.
  Form xdy = U(3, 1) * dU(3, {2});
  CHECK(trace_to_face(xdy, 3) ==
        (Polynomial::constant(3, 1) - U(3, 2)) * dU(3, {2}));

  // Ideal members trace to zero, so the map is well defined on classes.
  Polynomial ideal_gen = U(3, 1) + U(3, 2) + U(3, 3) - Polynomial::constant(3, 1);
  std::mt19937 rng(72);
  for (int t = 0; t < 8; ++t) {
    Form a = oracles::random_form(rng, 3, 1, 2);
    Form member = a * ideal_gen;
    for (int i = 1; i <= 3; ++i) CHECK(trace_to_face(member, i).is_zero());
  }
}

TEST_CASE("full-tensor vanishing spaces") {
  auto sph1 = QuotientContext::sphere(1);
  Form vdv = U(2, 2) * dU(2, {2});
  CHECK(membership(vdv, basis_ringring(1, 1, 1, sph1)).has_value());

  // The same form has no ambient double-ring extension at degree 1.
  CHECK(basis_ringring(1, 1, 1, QuotientContext::ambient(1)).dim() == 0);

  auto sph2 = QuotientContext::sphere(2);
  Form vwdvdw = U(3, 2) * U(3, 3) * dU(3, {2, 3});
  CHECK(membership(vwdvdw, basis_ringring(2, 2, 2, sph2)).has_value());
  CHECK_FALSE(membership(dU(2, {1}), basis_ringring(1, 1, 1, sph1)).has_value());

  // Ambient double-ring representatives have every coefficient divisible by
  // the bubble.
  for (int s = 3; s <= 5; ++s)
    for (int k = 0; k <= 2; ++k)
      for (const auto& b :
           basis_ringring(1, s, k, QuotientContext::ambient(1)).representatives)
        for (const auto& [I, c] : b.coeffs()) CHECK(c.divisible_by(Monomial{1, 1}));

  // Sphere members pull back to zero on every coordinate slice of the
  // sphere. The slice trace is invariant modulo the sphere ideal, so it can
  // be evaluated on any representative: at p in the slice u_i = 0, a tangent
  // vector of the slice circle rotates the two remaining coordinates.
  for (int s = 2; s <= 3; ++s)
    for (const auto& b : basis_ringring(2, s, 1, sph2).representatives)
      for (int i = 1; i <= 3; ++i)
        for (const auto& p : gamma_sphere_points(2, i, 8)) {
          std::vector<int> others;
          for (int j = 1; j <= 3; ++j)
            if (j != i) others.push_back(j);
          std::vector<Rational> t(3, Rational(0));
          t[others[0] - 1] = -p[others[1] - 1];
          t[others[1] - 1] = p[others[0] - 1];
          CHECK(form_value(b, p, {t}) == 0);
        }
}

TEST_CASE("membership coordinates are exact") {
  auto amb1 = QuotientContext::ambient(1);
  auto pm = basis_Pminus(1, 1, 1, amb1);
  Form witness = U(2, 1) * dU(2, {2}) - U(2, 2) * dU(2, {1});
  auto coords = membership(witness, pm);
  REQUIRE(coords.has_value());
  REQUIRE(coords->size() == 1);
  // Reconstruct: the coordinates must reproduce the input exactly.
  Form rebuilt(2, 1);
  for (size_t i = 0; i < coords->size(); ++i)
    rebuilt = rebuilt + pm.representatives[i] * (*coords)[i];
  CHECK(rebuilt == witness);

  Form zero(2, 1);
  auto zc = membership(zero, pm);
  REQUIRE(zc.has_value());
  for (const auto& c : *zc) CHECK(c == 0);
}

TEST_CASE("kernel of the radial contraction") {
  auto ker = kernel_iU(1, 1, 1);
  REQUIRE(ker.dim() == 1);
  Form witness = U(2, 1) * dU(2, {2}) - U(2, 2) * dU(2, {1});
  CHECK(membership(witness, ker).has_value());

  // k = 0: everything is killed, the kernel is the whole space.
  CHECK(kernel_iU(1, 1, 0).dim() == 3);
  CHECK(kernel_iU(2, 0, 1).dim() == 0);

  // Kernel members actually contract to zero, and they span Pminus for k >= 1.
  for (int s = 1; s <= 3; ++s)
    for (int k = 1; k <= 2; ++k) {
      auto kb = kernel_iU(2, s, k);
      for (const auto& b : kb.representatives)
        CHECK(interior_product(radial_field(3), b).is_zero());
      CHECK(equal_spans(kb, basis_Pminus(2, s, k, QuotientContext::ambient(2))));
    }
}

TEST_CASE("span comparison") {
  auto simp2 = QuotientContext::simplex(2);
  auto A = basis_P(2, 1, 1, simp2);
  CHECK(equal_spans(A, A));
  CHECK_FALSE(equal_spans(A, basis_Pminus(2, 1, 1, simp2)));
}

TEST_CASE("sphere trimmed spaces are star images one degree down") {
  auto sph2 = QuotientContext::sphere(2);
  for (int s = 1; s <= 3; ++s)
    for (int k = 0; k <= 2; ++k) {
      auto target = basis_Pminus(2, s, k, sph2);
      std::vector<Form> images;
      for (const auto& b : basis_P(2, s - 1, 2 - k, sph2).representatives)
        images.push_back(hodge_sphere(b));
      CHECK(span_rank(images, sph2) == target.dim());
      for (const auto& im : images)
        CHECK(membership(im, target).has_value());
    }
}

TEST_CASE("double-ring trimmed spaces are star images one degree down") {
  auto sph1 = QuotientContext::sphere(1);
  for (int s = 2; s <= 4; ++s)
    for (int k = 0; k <= 1; ++k) {
      auto target = basis_ringring_minus(1, s, k, sph1);
      std::vector<Form> images;
      for (const auto& b : basis_ringring(1, s - 1, 1 - k, sph1).representatives)
        images.push_back(hodge_sphere(b));
      CHECK(span_rank(images, sph1) == target.dim());
      for (const auto& im : images)
        CHECK(membership(im, target).has_value());
    }
}

TEST_CASE("parity subspaces split the full space") {
  auto sph2 = QuotientContext::sphere(2);
  for (int s = 1; s <= 2; ++s)
    for (int k = 0; k <= 2; ++k) {
      auto even = make_basis(2, s, k, Flavor::P_even, sph2);
      auto odd = make_basis(2, s, k, Flavor::P_odd, sph2);
      auto full = basis_P(2, s, k, sph2);
      // Parity components of homogenized classes stay inside the space.
      for (const auto& b : even.representatives) {
        CHECK(membership(b, full).has_value());
        CHECK(even_part(b) == b);
      }
      for (const auto& b : odd.representatives) CHECK(odd_part(b) == b);
    }
}
