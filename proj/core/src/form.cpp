#include "polyform/form.hpp"

#include <algorithm>

#include "polyform/errors.hpp"

namespace polyform {

namespace {

// Results that overflow the top degree are identically zero; give them a
// legal nominal degree so the Form constructor accepts them.
int clamp_degree(int ambient, int k) {
  if (k < 0) return 0;
  if (k > ambient) return ambient;
  return k;
}

}  // namespace

Form::Form(int ambient_dim, int degree) : ambient_(ambient_dim), degree_(degree) {
  if (ambient_dim < 1 || ambient_dim > 32)
    throw DimensionError("form ambient dimension must be in 1..32");
  if (degree < 0 || degree > ambient_dim)
    throw DegreeError("form degree must be in 0..ambient dimension");
}

Form Form::from_scalar(const Polynomial& p) {
  Form f(p.nvars(), 0);
  f.add_term(IndexSet(), p);
  return f;
}

Form Form::monomial_form(const Monomial& m, const Rational& c, const IndexSet& I) {
  Form f(m.nvars(), static_cast<int>(I.size()));
  f.add_term(I, m, c);
  return f;
}

Form Form::basis_covector(int ambient_dim, const IndexSet& I) {
  Form f(ambient_dim, static_cast<int>(I.size()));
  f.add_term(I, Polynomial::constant(ambient_dim, 1));
  return f;
}

int Form::poly_degree() const {
  int d = -1;
  for (const auto& [I, p] : coeffs_) d = std::max(d, p.degree());
  return d;
}

Polynomial Form::coefficient(const IndexSet& I) const {
  auto it = coeffs_.find(I);
  if (it != coeffs_.end()) return it->second;
  return Polynomial(ambient_);
}

Form& Form::add_term(const IndexSet& I, const Polynomial& p) {
  if (p.nvars() != ambient_)
    throw DimensionError("coefficient variable count does not match form ambient dimension");
  if (static_cast<int>(I.size()) != degree_)
    throw DegreeError("index set size does not match form degree");
  if (I.max_index() > ambient_)
    throw DimensionError("index set exceeds form ambient dimension");
  if (p.is_zero()) return *this;
  auto [it, fresh] = coeffs_.emplace(I, p);
  if (!fresh) {
    it->second = it->second + p;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
  return *this;
}

Form& Form::add_term(const IndexSet& I, const Monomial& m, const Rational& c) {
  return add_term(I, Polynomial::term(m, c));
}

Form Form::operator+(const Form& o) const {
  if (ambient_ != o.ambient_)
    throw DimensionError("cannot add forms with different ambient dimensions");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (degree_ != o.degree_)
    throw DegreeError("cannot add forms of different degrees");
  Form out = *this;
  for (const auto& [I, p] : o.coeffs_) out.add_term(I, p);
  return out;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator-() const {
  Form out(ambient_, degree_);
  for (const auto& [I, p] : coeffs_) out.coeffs_.emplace(I, -p);
  return out;
}

Form Form::operator*(const Polynomial& p) const {
  if (p.nvars() != ambient_)
    throw DimensionError("scalar multiplier variable count does not match form");
  Form out(ambient_, degree_);
  for (const auto& [I, q] : coeffs_) out.add_term(I, q * p);
  return out;
}

Form Form::operator*(const Rational& c) const {
  Form out(ambient_, degree_);
  if (c == 0) return out;
  for (const auto& [I, q] : coeffs_) out.coeffs_.emplace(I, q * c);
  return out;
}

PolyVectorField::PolyVectorField(std::vector<Polynomial> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw DimensionError("vector field needs at least one component");
  for (const auto& p : components_)
    if (p.nvars() != nvars())
      throw DimensionError("vector field components must share the variable count");
}

Form wedge(const Form& a, const Form& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("cannot wedge forms with different ambient dimensions");
  const int N = a.ambient_dim();
  Form out(N, clamp_degree(N, a.degree() + b.degree()));
  if (a.degree() + b.degree() > N) return out;
  for (const auto& [I, p] : a.coeffs()) {
    for (const auto& [J, q] : b.coeffs()) {
      const int s = merge_sign(I, J);
      if (s == 0) continue;
      Polynomial pq = p * q;
      if (s < 0) pq = -pq;
      out.add_term(IndexSet(I.bits() | J.bits()), pq);
    }
  }
  return out;
}

Form exterior_derivative(const Form& a) {
  const int N = a.ambient_dim();
  Form out(N, clamp_degree(N, a.degree() + 1));
  if (a.degree() + 1 > N) return out;
  for (const auto& [I, p] : a.coeffs()) {
    for (int i = 1; i <= N; ++i) {
      if (I.contains(i)) continue;
      Polynomial dp = p.derivative(i);
      if (dp.is_zero()) continue;
      const int s = merge_sign(IndexSet{i}, I);
      out.add_term(I.with(i), s < 0 ? -dp : dp);
    }
  }
  return out;
}

Form interior_product(const PolyVectorField& V, const Form& a) {
  if (V.nvars() != a.ambient_dim())
    throw DimensionError("vector field and form ambient dimensions differ");
  const int N = a.ambient_dim();
  Form out(N, clamp_degree(N, a.degree() - 1));
  if (a.degree() == 0) return out;
  for (const auto& [I, p] : a.coeffs()) {
    int pos = 0;
    for (int i : I.indices()) {
      Polynomial c = p * V.component(i);
      if (!c.is_zero()) out.add_term(I.without(i), (pos % 2) ? -c : c);
      ++pos;
    }
  }
  return out;
}

Form hodge_euclid(const Form& a) {
  const int N = a.ambient_dim();
  Form out(N, N - a.degree());
  for (const auto& [I, p] : a.coeffs()) {
    const IndexSet J = I.complement(N);
    const int s = merge_sign(I, J);
    out.add_term(J, s < 0 ? -p : p);
  }
  return out;
}

Form reflect(int i, const Form& a) {
  const int N = a.ambient_dim();
  if (i < 1 || i > N) throw DimensionError("reflection index out of range");
  Form out(N, a.degree());
  for (const auto& [I, p] : a.coeffs()) {
    const bool flip_I = I.contains(i);
    for (const auto& [m, c] : p.terms()) {
      const bool flip_m = (m.exponent(i) % 2) != 0;
      out.add_term(I, m, (flip_I != flip_m) ? -c : c);
    }
  }
  return out;
}

namespace {

Form grade_filter(const Form& a, uint32_t grade) {
  Form out(a.ambient_dim(), a.degree());
  for (const auto& [I, p] : a.coeffs())
    for (const auto& [m, c] : p.terms())
      if (term_grade(m, I) == grade) out.add_term(I, m, c);
  return out;
}

}  // namespace

Form even_part(const Form& a) { return grade_filter(a, 0); }

Form odd_part(const Form& a) {
  return grade_filter(a, IndexSet::full(a.ambient_dim()).bits());
}

std::map<uint32_t, Form> grade_split(const Form& a) {
  std::map<uint32_t, Form> parts;
  for (const auto& [I, q] : a.coeffs()) {
    for (const auto& [m, c] : q.terms()) {
      auto [it, fresh] =
          parts.try_emplace(term_grade(m, I), Form(a.ambient_dim(), a.degree()));
      it->second.add_term(I, m, c);
    }
  }
  return parts;
}

Form lie_derivative_radial(const Form& a) {
  const PolyVectorField U = radial_field(a.ambient_dim());
  return interior_product(U, exterior_derivative(a)) +
         exterior_derivative(interior_product(U, a));
}

PolyVectorField radial_field(int nvars) {
  std::vector<Polynomial> comps;
  comps.reserve(nvars);
  for (int i = 1; i <= nvars; ++i) comps.push_back(Polynomial::variable(nvars, i));
  return PolyVectorField(std::move(comps));
}

PolyVectorField gradient_t(int nvars) {
  std::vector<Polynomial> comps(nvars, Polynomial::constant(nvars, 1));
  return PolyVectorField(std::move(comps));
}

PolyVectorField kappa_field(int nvars) {
  Polynomial t(nvars);
  for (int j = 1; j <= nvars; ++j) t = t + Polynomial::variable(nvars, j);
  const Rational inv = make_rational(1, nvars);
  std::vector<Polynomial> comps;
  comps.reserve(nvars);
  for (int i = 1; i <= nvars; ++i)
    comps.push_back(Polynomial::variable(nvars, i) - t * inv);
  return PolyVectorField(std::move(comps));
}

Form conormal(int nvars) {
  Form nu(nvars, 1);
  for (int i = 1; i <= nvars; ++i)
    nu.add_term(IndexSet{i}, Monomial::unit(nvars, i), 1);
  return nu;
}

Polynomial bubble(int nvars) {
  std::vector<int> exps(nvars, 1);
  return Polynomial::term(Monomial(exps), 1);
}

Form volume_form(int nvars) {
  return Form::basis_covector(nvars, IndexSet::full(nvars));
}

std::vector<IndexSet> index_sets(int n, int k) {
  if (n < 0 || n > 32) throw DimensionError("index universe must be in 0..32");
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    IndexSet I;
    for (int v : pick) I = I.with(v);
    out.push_back(I);
    // advance to the next k-combination of {1..n} in lex order
    int j = k - 1;
    while (j >= 0 && pick[j] == n - (k - 1 - j)) --j;
    if (j < 0) break;
    ++pick[j];
    for (int l = j + 1; l < k; ++l) pick[l] = pick[l - 1] + 1;
  }
  std::sort(out.begin(), out.end(),
            [](const IndexSet& a, const IndexSet& b) { return IndexSetOrder()(a, b); });
  return out;
}

namespace {

void fill_exponents(int nvars, int pos, int remaining, std::vector<int>& exps,
                    std::vector<Monomial>& out) {
  if (pos == nvars) {
    if (remaining == 0) out.emplace_back(exps);
    return;
  }
  if (pos == nvars - 1) {
    exps[pos] = remaining;
    out.emplace_back(exps);
    exps[pos] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[pos] = e;
    fill_exponents(nvars, pos + 1, remaining - e, exps, out);
  }
  exps[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> exps(nvars, 0);
  fill_exponents(nvars, 0, d, exps, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return MonomialOrder()(a, b); });
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int d) {
  std::vector<Monomial> out;
  for (int j = 0; j <= d; ++j) {
    auto block = monomials_of_degree(nvars, j);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace polyform
