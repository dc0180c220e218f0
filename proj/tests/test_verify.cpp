#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "polyform/checks.hpp"
#include "polyform/integrate.hpp"

using namespace polyform;

namespace {
Form dU(int nvars, std::initializer_list<int> idx) {
  return Form::basis_covector(nvars, IndexSet(idx));
}
Polynomial U(int nvars, int var) { return Polynomial::variable(nvars, var); }
}  // namespace

TEST_CASE("simplex integrals of basic forms") {
  CHECK(integrate_simplex(dU(2, {1})) == 1);
  CHECK(integrate_simplex(dU(3, {1, 2})) == make_rational(1, 2));
  CHECK(integrate_simplex(U(3, 3) * dU(3, {1, 2})) == make_rational(1, 6));
  CHECK_THROWS_AS(integrate_simplex(dU(3, {1})), DegreeError);
}

TEST_CASE("factorial identity against iterated antidifferentiation") {
  // Every monomial integrand of total degree <= 4, n = 1 and n = 2,
  // including exponents on the eliminated coordinate.
  for (int n = 1; n <= 2; ++n) {
    const int nv = n + 1;
    IndexSet chart = IndexSet::full(nv).without(nv);
    for (int d = 0; d <= 4; ++d)
      for (const auto& m : monomials_of_degree(nv, d)) {
        Form omega = Form::monomial_form(m, 1, chart);
        Rational lib = integrate_simplex(omega);
        // Independent route: substitute and antidifferentiate.
        CHECK(lib == oracles::iterated_form_integral(omega));
        // Direct closed form.
        Int num = 1;
        for (int v = 1; v <= nv; ++v) num *= factorial(m.exponent(v));
        CHECK(lib == make_rational(num, factorial(n + m.degree())));
      }
  }
}

TEST_CASE("iterated oracle on whole forms") {
  std::mt19937 rng(81);
  for (int n = 1; n <= 2; ++n)
    for (int t = 0; t < 10; ++t) {
      Form omega = oracles::random_form(rng, n + 1, n, 3, 3);
      CHECK(integrate_simplex(omega) == oracles::iterated_form_integral(omega));
    }
}

TEST_CASE("floating point quadrature sanity check") {
  std::mt19937 rng(82);
  int done = 0;
  for (int t = 0; t < 25; ++t)
    for (int n = 1; n <= 2; ++n) {
      Form omega = oracles::random_form(rng, n + 1, n, 3, 2);
      double exact = integrate_simplex(omega).convert_to<double>();
      double quad = oracles::quadrature_simplex(omega);
      CHECK(std::abs(quad - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
      ++done;
    }
  CHECK(done == 50);
}

TEST_CASE("pairings on the worked examples") {
  Form ydy = U(3, 2) * dU(3, {2});
  Form dual_ydy = U(3, 1) * U(3, 2).pow(2) * dU(3, {3}) -
                  U(3, 2).pow(2) * U(3, 3) * dU(3, {1});
  CHECK(pairing(ydy, dual_ydy) == make_rational(1, 60));

  CHECK(pairing(ydy, Form(3, 2)) == 0);

  Form rot = U(3, 1) * dU(3, {2}) - U(3, 2) * dU(3, {1});
  Form dual_rot = U(3, 1) * U(3, 2) * dU(3, {3});
  CHECK(pairing(rot, dual_rot) > 0);
  CHECK(pairing(rot, dual_rot) == make_rational(1, 30));
  // Cross-checked by hand: the wedge reduces to x y (x + y) dx ^ dy on the
  // chart, and each monomial integrates to 1/60.
  CHECK(oracles::iterated_form_integral(
            reduce_mod(wedge(rot, dual_rot), QuotientContext::simplex(2))) ==
        make_rational(1, 30));
}

TEST_CASE("gram matrices") {
  // The span of y dy alone.
  auto simp2 = QuotientContext::simplex(2);
  SpaceBasis single{simp2, 2, 1, 1, Flavor::P, {U(3, 2) * dU(3, {2})}};
  auto g = gram_matrix(single);
  REQUIRE(g.entries.size() == 1);
  CHECK(g.entries[0][0] == make_rational(1, 60));
  CHECK(is_positive_definite(g));

  // Empty basis: trivially positive definite.
  SpaceBasis empty{simp2, 2, 1, 1, Flavor::P, {}};
  CHECK(is_positive_definite(gram_matrix(empty)));

  // Constants on T^1.
  auto simp1 = QuotientContext::simplex(1);
  CHECK(is_positive_definite(gram_matrix(basis_P(1, 0, 0, simp1))));

  // Hand-built counterexamples for the matrix test itself.
  GramMatrix indef{{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}},
                   empty,
                   "duality"};
  CHECK_FALSE(is_positive_definite(indef));
  GramMatrix asym{{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}},
                  empty,
                  "duality"};
  CHECK_THROWS_AS(is_positive_definite(asym), ConsistencyError);

  // Whole spaces stay positive definite.
  for (int r = 0; r <= 2; ++r)
    for (int k = 0; k <= 2; ++k) {
      CHECK(is_positive_definite(gram_matrix(basis_P(2, r, k, simp2))));
      if (r >= 1)
        CHECK(is_positive_definite(gram_matrix(basis_Pminus(2, r, k, simp2))));
    }
}

TEST_CASE("named checks pass on spec instances") {
  CHECK(check_tsiso(2, 1, 1, 1).pass);
  CHECK(check_tsiso(2, 2, 1, 3).pass);
  CHECK(check_tsiso(2, 3, 1, 4).pass);
  CHECK(check_parity_laws(1, 100).pass);
  CHECK(check_pm_equivalence(2, 1, 1).pass);
  CHECK(check_pm_equivalence(1, 2, 0).pass);
  CHECK(check_appendix_b(1).pass);
  CHECK(check_pmker(1, 1, 1).pass);
  CHECK(check_pmker(2, 2, 1).pass);
  CHECK(check_pmker(2, 3, 0).pass);
  CHECK(check_ringring_divisibility(1, 3, 1, false).pass);
  CHECK(check_no_extension_example(1).pass);
  CHECK(check_worked_examples(1).pass);
  CHECK(check_worked_examples(2).pass);

  // Reports carry their parameters and a verdict string.
  auto rep = check_tsiso(2, 1, 1, 1);
  CHECK(rep.check_name == "tsiso");
  CHECK(std::string(rep.verdict()) == "pass");
  CHECK(rep.parameters.find("n=2") != std::string::npos);
}

TEST_CASE("dimension tables are clean and match the spec rows") {
  auto table = dim_table(2, 2);
  CHECK(dim_table_clean(table));

  auto find = [&](Flavor f, Space s, int r, int k) -> const DimRow& {
    for (const auto& row : table)
      if (row.flavor == f && row.context == s && row.r == r && row.k == k)
        return row;
    throw std::runtime_error("row not found");
  };
  CHECK(find(Flavor::P, Space::simplex, 1, 1).dim == 6);
  CHECK(find(Flavor::Pminus, Space::simplex, 1, 1).dim == 3);
  CHECK(find(Flavor::P, Space::simplex, 1, 1).formula_dim == 6);
  CHECK(find(Flavor::P, Space::simplex, 2, 0).dim == 6);

  CHECK(dim_table_clean(dim_table(1, 3)));
}

TEST_CASE("suites run clean") {
  for (const auto& name : suite_names()) CHECK(!name.empty());
  auto reports = run_suite("parity", 1);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].pass);
  CHECK_THROWS_AS(run_suite("bogus", 1), UsageError);
  CHECK_THROWS_AS(run_suite("parity", 0), UsageError);
}
