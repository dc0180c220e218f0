#include "polyform/polynomial.hpp"

#include <sstream>

namespace polyform {

uint32_t parity_mask(const Monomial& m) {
  uint32_t mask = 0;
  const auto& e = m.exponents();
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] & 1) mask |= 1u << i;
  return mask;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
  Polynomial p(nvars);
  p.add_term(Monomial::unit(nvars, var), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw DimensionError("Polynomial: term variable count mismatch");
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_nvars(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_nvars(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_nvars(o);
  Polynomial r(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DegreeError("Polynomial::pow: negative exponent");
  Polynomial r = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var);
    if (e == 0) continue;
    r.add_term(m.with_exponent(var, e - 1), c * e);
  }
  return r;
}

Polynomial Polynomial::antiderivative(int var) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var);
    r.add_term(m.with_exponent(var, e + 1), c / (e + 1));
  }
  return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionError("Polynomial::eval: point has wrong dimension");
  // Powers of each coordinate are shared across terms.
  std::vector<std::vector<Rational>> powers(nvars_, {Rational(1)});
  auto power = [&](int var, int e) -> const Rational& {
    auto& p = powers[var];
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * point[var]);
    return p[e];
  };
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    const auto& e = m.exponents();
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) v *= power(i, e[i]);
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
  require_same_nvars(value);
  Polynomial r(nvars_);
  std::vector<Polynomial> powers = {constant(nvars_, 1)};
  auto power = [&](int e) -> const Polynomial& {
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    return powers[e];
  };
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var);
    Polynomial rest = term(m.with_exponent(var, 0), c);
    r = r + rest * power(e);
  }
  return r;
}

Polynomial Polynomial::substitute_squares() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e = m.exponents();
    for (int& x : e) x *= 2;
    r.terms_.emplace(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::halve_exponents() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e = m.exponents();
    for (int& x : e) {
      if (x & 1) throw ParityError("halve_exponents: odd exponent");
      x /= 2;
    }
    r.terms_.emplace(Monomial(std::move(e)), c);
  }
  return r;
}

std::vector<Polynomial> Polynomial::homogeneous_components() const {
  int d = degree();
  if (d < 0) return {};
  std::vector<Polynomial> comps(d + 1, Polynomial(nvars_));
  for (const auto& [m, c] : terms_) comps[m.degree()].add_term(m, c);
  return comps;
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::homogenize_parity(int s) const {
  Polynomial r(nvars_);
  Polynomial r2 = radius_squared(nvars_);
  for (const auto& comp : homogeneous_components()) {
    if (comp.is_zero()) continue;
    int j = comp.degree();
    if (j > s) throw ParityError("homogenize_parity: component degree exceeds target");
    if ((s - j) & 1) throw ParityError("homogenize_parity: mixed parity component");
    r = r + comp * r2.pow((s - j) / 2);
  }
  return r;
}

bool Polynomial::divisible_by(const Monomial& m) const {
  for (const auto& [t, c] : terms_)
    if (!m.divides(t)) return false;
  return true;
}

Polynomial Polynomial::divide_exact(const Monomial& m) const {
  Polynomial r(nvars_);
  for (const auto& [t, c] : terms_) {
    if (!m.divides(t)) {
      std::ostringstream msg;
      msg << "divide_exact: term with exponents (";
      for (size_t i = 0; i < t.exponents().size(); ++i)
        msg << (i ? "," : "") << t.exponents()[i];
      msg << ") not divisible";
      throw DivisibilityError(msg.str());
    }
    r.terms_.emplace(t.divide_by(m), c);
  }
  return r;
}

bool Polynomial::has_uniform_parity(uint32_t mask) const {
  for (const auto& [m, c] : terms_)
    if (parity_mask(m) != mask) return false;
  return true;
}

Polynomial radius_squared(int nvars) {
  Polynomial p(nvars);
  for (int i = 1; i <= nvars; ++i) p.add_term(Monomial::unit(nvars, i, 2), 1);
  return p;
}

}  // namespace polyform
