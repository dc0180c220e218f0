#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polyform/polynomial.hpp"

using namespace polyform;

namespace {
Polynomial X(int nvars, int var) { return Polynomial::variable(nvars, var); }
Polynomial C(int nvars, const Rational& c) { return Polynomial::constant(nvars, c); }
}  // namespace

TEST_CASE("ring operations on fixed inputs") {
  Polynomial x1 = X(2, 1), x2 = X(2, 2);

  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);

  Polynomial p = x1 * x1 * x2 + C(2, Rational(3));
  CHECK(p + Polynomial(2) == p);
  CHECK(p - p == Polynomial(2));

  Polynomial half_x1 = x1 * make_rational(1, 2);
  Polynomial two_thirds_x2 = x2 * make_rational(2, 3);
  CHECK(half_x1 * two_thirds_x2 == x1 * x2 * make_rational(1, 3));
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(41);
  for (int t = 0; t < 20; ++t) {
    Polynomial a = oracles::random_polynomial(rng, 3, 3);
    Polynomial b = oracles::random_polynomial(rng, 3, 3);
    Polynomial c = oracles::random_polynomial(rng, 3, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("substitute_squares doubles exponents") {
  CHECK(X(1, 1).substitute_squares() == Polynomial::term(Monomial{2}, 1));

  Polynomial p = X(3, 1) * X(3, 2) + X(3, 3);
  Polynomial expect =
      Polynomial::term(Monomial{2, 2, 0}, 1) + Polynomial::term(Monomial{0, 0, 2}, 1);
  CHECK(p.substitute_squares() == expect);

  CHECK(C(2, 5).substitute_squares() == C(2, 5));

  // Ring homomorphism, and halve_exponents inverts it.
  std::mt19937 rng(42);
  for (int t = 0; t < 10; ++t) {
    Polynomial a = oracles::random_polynomial(rng, 2, 4);
    Polynomial b = oracles::random_polynomial(rng, 2, 4);
    CHECK((a * b).substitute_squares() ==
          a.substitute_squares() * b.substitute_squares());
    CHECK((a + b).substitute_squares() ==
          a.substitute_squares() + b.substitute_squares());
    CHECK(a.substitute_squares().halve_exponents() == a);
  }
  CHECK_THROWS_AS(X(2, 1).halve_exponents(), ParityError);
}

TEST_CASE("homogeneous components") {
  Polynomial p = C(2, 1) + X(2, 1) + X(2, 1) * X(2, 2);
  auto comps = p.homogeneous_components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == C(2, 1));
  CHECK(comps[1] == X(2, 1));
  CHECK(comps[2] == X(2, 1) * X(2, 2));

  CHECK(Polynomial(2).homogeneous_components().empty());

  Polynomial q = X(2, 1) * X(2, 1) + X(2, 2) * X(2, 2);
  auto qc = q.homogeneous_components();
  REQUIRE(qc.size() == 3);
  CHECK(qc[0].is_zero());
  CHECK(qc[1].is_zero());
  CHECK(qc[2] == q);

  std::mt19937 rng(43);
  for (int t = 0; t < 10; ++t) {
    Polynomial a = oracles::random_polynomial(rng, 3, 4, 5);
    Polynomial sum(3);
    for (const auto& comp : a.homogeneous_components()) sum = sum + comp;
    CHECK(sum == a);
    if (a.degree() >= 1) CHECK(a.homogeneous_component(1) == a.homogeneous_components()[1]);
  }
}

TEST_CASE("homogenize_parity pads with the squared radius") {
  Polynomial u1 = X(2, 1), u2 = X(2, 2);

  CHECK(u1.homogenize_parity(3) == u1 * u1 * u1 + u1 * u2 * u2);
  CHECK(C(2, 1).homogenize_parity(0) == C(2, 1));
  CHECK((u1 * u1 + C(2, 1)).homogenize_parity(2) ==
        u1 * u1 * Rational(2) + u2 * u2);

  // Values on the unit circle are unchanged: check at 20 rational points.
  auto ctx = QuotientContext::sphere(1);
  auto pts = sample_points(ctx, 20);
  REQUIRE(pts.size() == 20);
  Polynomial p = u1 * u1 + C(2, 1);
  Polynomial h = p.homogenize_parity(2);
  for (const auto& pt : pts) CHECK(p.eval(pt) == h.eval(pt));

  // Mixed parity or components above the target degree are rejected.
  CHECK_THROWS_AS((u1 + C(2, 1)).homogenize_parity(3), ParityError);
  CHECK_THROWS_AS((u1 * u1 * u1).homogenize_parity(1), ParityError);
}

TEST_CASE("divide_exact by a monomial") {
  Polynomial u1 = X(2, 1), u2 = X(2, 2);
  Monomial u1u2{1, 1};

  CHECK((u1 * u2 * u2).divide_exact(u1u2) == u2);
  CHECK(Polynomial(2).divide_exact(Monomial{1, 0}) == Polynomial(2));
  CHECK((u1 * u1 * u2 * Rational(2) + u1 * u2 * u2).divide_exact(u1u2) ==
        u1 * Rational(2) + u2);

  CHECK(u1.divisible_by(Monomial{1, 0}));
  CHECK_FALSE(u1.divisible_by(Monomial{0, 1}));
  CHECK_THROWS_AS((u1 + u2).divide_exact(Monomial{1, 0}), DivisibilityError);

  std::mt19937 rng(44);
  for (int t = 0; t < 10; ++t) {
    Polynomial p = oracles::random_polynomial(rng, 2, 3);
    Monomial m = oracles::random_monomial(rng, 2, 2);
    Polynomial prod = p * Polynomial::term(m, 1);
    CHECK(prod.divisible_by(m));
    CHECK(prod.divide_exact(m) == p);
  }
}

TEST_CASE("evaluation at rational points") {
  CHECK((X(2, 1) + X(2, 2)).eval({make_rational(1, 2), make_rational(1, 2)}) == 1);
  CHECK((X(2, 1) * X(2, 1) + X(2, 2) * X(2, 2))
            .eval({make_rational(3, 5), make_rational(4, 5)}) == 1);
  CHECK((X(3, 1) * X(3, 2) * X(3, 3)).eval({1, 2, 3}) == 6);
  CHECK_THROWS_AS(X(2, 1).eval({Rational(1)}), DimensionError);
}

TEST_CASE("calculus operations") {
  Polynomial p = X(2, 1).pow(3) * X(2, 2) + X(2, 2) * Rational(2);
  CHECK(p.derivative(1) == X(2, 1).pow(2) * X(2, 2) * Rational(3));
  CHECK(p.antiderivative(1).derivative(1) == p);

  std::mt19937 rng(45);
  for (int t = 0; t < 10; ++t) {
    Polynomial a = oracles::random_polynomial(rng, 2, 4);
    Polynomial b = oracles::random_polynomial(rng, 2, 4);
    // Product rule.
    CHECK((a * b).derivative(2) == a.derivative(2) * b + a * b.derivative(2));
    CHECK(a.antiderivative(1).derivative(1) == a);
  }
}

TEST_CASE("parity bookkeeping") {
  CHECK(parity_mask(Monomial{1, 0, 2}) == 0b001u);
  CHECK(parity_mask(Monomial{0, 0, 0}) == 0u);
  CHECK((X(2, 1) * X(2, 1)).has_uniform_parity(0));
  CHECK(X(2, 1).has_uniform_parity(0b01));
  CHECK_FALSE((X(2, 1) + X(2, 2)).has_uniform_parity(0b01));
  CHECK(radius_squared(3) ==
        X(3, 1).pow(2) + X(3, 2).pow(2) + X(3, 3).pow(2));
}

TEST_CASE("substitute replaces a variable by a polynomial") {
  // x1^2 with x1 -> 1 - x2 expands fully.
  Polynomial p = X(2, 1).pow(2);
  Polynomial sub = p.substitute(1, C(2, 1) - X(2, 2));
  CHECK(sub == C(2, 1) - X(2, 2) * Rational(2) + X(2, 2).pow(2));
  // Substituting an absent variable changes nothing.
  CHECK(X(2, 2).substitute(1, Polynomial(2)) == X(2, 2));
}
