#include "polyform/context.hpp"

#include <atomic>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "polyform/errors.hpp"
#include "polyform/linalg.hpp"

namespace polyform {

namespace {

std::atomic<long long> g_agree{0};
std::atomic<long long> g_disagree{0};

void require_ctx_dim(const Form& a, const QuotientContext& ctx) {
  if (a.ambient_dim() != ctx.nvars())
    throw DimensionError("form ambient dimension does not match context");
}

// 1 - sum_{j < N} u_j^2, the value of u_N^2 on the unit sphere.
Polynomial sphere_square_value(int N) {
  Polynomial s = Polynomial::constant(N, 1);
  for (int j = 1; j < N; ++j)
    s = s - Polynomial::term(Monomial::unit(N, j, 2), 1);
  return s;
}

// Rewrite every coefficient to u_N-degree <= 1. Division by the monic (in
// u_N) relation u_N^2 - (1 - sum u_j^2) has a unique remainder, so this is
// well defined and linear.
Polynomial coeff_reduce_poly(const Polynomial& q, const Polynomial& S) {
  const int N = q.nvars();
  Polynomial out(N);
  std::vector<Polynomial> Spow = {Polynomial::constant(N, 1)};
  auto power = [&](int e) -> const Polynomial& {
    while (static_cast<int>(Spow.size()) <= e) Spow.push_back(Spow.back() * S);
    return Spow[e];
  };
  for (const auto& [m, c] : q.terms()) {
    const int e = m.exponent(N);
    if (e <= 1) {
      out.add_term(m, c);
      continue;
    }
    out = out + Polynomial::term(m.with_exponent(N, e % 2), c) * power(e / 2);
  }
  return out;
}

Form coeff_reduce(const Form& a) {
  const int N = a.ambient_dim();
  const Polynomial S = sphere_square_value(N);
  Form out(N, a.degree());
  for (const auto& [I, q] : a.coeffs()) out.add_term(I, coeff_reduce_poly(q, S));
  return out;
}

// The sphere normal form: subtract the conormal component, then push the
// coefficients below u_N-degree two. The result is the unique representative
// of the class with those two properties, and the map is linear with kernel
// exactly (|u|^2 - 1) Lambda + nu ^ Lambda.
Form sphere_canonical(const Form& a) {
  const int N = a.ambient_dim();
  if (a.degree() == 0) return coeff_reduce(a);
  Form iu = interior_product(radial_field(N), a);
  Form out = a - wedge(conormal(N), coeff_reduce(iu));
  return coeff_reduce(out);
}

// Simplex normal form: dx_N -> -sum_{j<N} dx_j, then x_N -> 1 - sum_{j<N} x_j.
Form simplex_canonical(const Form& a) {
  const int N = a.ambient_dim();
  Form rewoven(N, a.degree());
  for (const auto& [I, q] : a.coeffs()) {
    if (!I.contains(N)) {
      rewoven.add_term(I, q);
      continue;
    }
    const IndexSet Ip = I.without(N);  // du_I = du_{Ip} ^ du_N, N is the max index
    for (int j = 1; j < N; ++j) {
      if (Ip.contains(j)) continue;
      const int s = merge_sign(Ip, IndexSet{j});
      rewoven.add_term(Ip.with(j), s < 0 ? q : -q);
    }
  }
  Polynomial xn = Polynomial::constant(N, 1);
  for (int j = 1; j < N; ++j) xn = xn - Polynomial::variable(N, j);
  Form out(N, a.degree());
  for (const auto& [I, q] : rewoven.coeffs()) out.add_term(I, q.substitute(N, xn));
  return out;
}

// Smallest-degree re-expression of one parity component. Slots are monomial
// forms of the component's own parity, fed degree by degree (index sets
// outer, monomials inner); the first degree whose slot span contains the
// class wins, and the echelon solve leaves every slot that did not become a
// pivot at zero. The component's own terms are always among the slots at its
// own degree, so the search terminates there at the latest.
Form sphere_minimal_component(const Form& comp, uint32_t grade, bool keep_input_on_tie) {
  const int N = comp.ambient_dim();
  const int k = comp.degree();
  const Form target = sphere_canonical(comp);
  if (target.is_zero()) return Form(N, k);
  const int own_deg = comp.poly_degree();
  FormIndexer ix;
  Eliminator elim;
  std::vector<std::pair<IndexSet, Monomial>> slots;
  const SparseVec tv = ix.to_sparse(target);
  const auto sets = index_sets(N, k);
  for (int d = 0; d <= own_deg; ++d) {
    for (const IndexSet& I : sets) {
      for (const Monomial& m : monomials_of_degree(N, d)) {
        if (term_grade(m, I) != grade) continue;
        elim.add_row(ix.to_sparse(sphere_canonical(Form::monomial_form(m, 1, I))));
        slots.emplace_back(I, m);
      }
    }
    std::map<int, Rational> combo;
    if (!elim.reduce(tv, &combo).empty()) continue;
    if (keep_input_on_tie && d == own_deg) return comp;
    Form out(N, k);
    for (const auto& [j, c] : combo) out.add_term(slots[j].first, slots[j].second, c);
    return out;
  }
  throw ConsistencyError("sphere representative search exhausted its degree bound");
}

Form sphere_reduce(const Form& a, bool keep_input_on_tie) {
  Form canonical_probe = sphere_canonical(a);
  if (canonical_probe.is_zero()) return Form(a.ambient_dim(), a.degree());
  Form out(a.ambient_dim(), a.degree());
  for (const auto& [g, comp] : grade_split(a))
    out = out + sphere_minimal_component(comp, g, keep_input_on_tie);
  return out;
}

// Exact determinant of a small matrix by Gaussian elimination with row swaps.
Rational small_det(std::vector<std::vector<Rational>> M) {
  const int k = static_cast<int>(M.size());
  Rational det = 1;
  for (int c = 0; c < k; ++c) {
    int piv = -1;
    for (int r = c; r < k; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    const Rational inv = Rational(1) / M[c][c];
    for (int r = c + 1; r < k; ++r) {
      if (M[r][c] == 0) continue;
      const Rational f = M[r][c] * inv;
      for (int j = c; j < k; ++j) M[r][j] -= f * M[c][j];
    }
  }
  return det;
}

std::vector<Rational> stereographic(const std::vector<Rational>& a) {
  Rational s2 = 0;
  for (const auto& x : a) s2 += x * x;
  const Rational denom = 1 + s2;
  std::vector<Rational> u;
  u.reserve(a.size() + 1);
  for (const auto& x : a) u.push_back(2 * x / denom);
  u.push_back((1 - s2) / denom);
  return u;
}

// Fixed-seed rational fuzz: numerators in [-20, 20] minus zero, denominators
// in [1, 8]. Deterministic across runs by construction.
Rational draw_rational(std::mt19937& rng, bool allow_zero) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 8);
  int p = num(rng);
  while (!allow_zero && p == 0) p = num(rng);
  return make_rational(p, den(rng));
}

}  // namespace

QuotientContext::QuotientContext(Space s, int n) : space_(s), n_(n) {
  if (n < 1 || n > 30) throw DimensionError("manifold dimension must be in 1..30");
}

QuotientContext QuotientContext::ambient(int n) { return QuotientContext(Space::ambient, n); }
QuotientContext QuotientContext::simplex(int n) { return QuotientContext(Space::simplex, n); }
QuotientContext QuotientContext::sphere(int n) { return QuotientContext(Space::sphere, n); }

Form ideal_normal_form(const Form& a, const QuotientContext& ctx) {
  require_ctx_dim(a, ctx);
  switch (ctx.space()) {
    case Space::ambient:
      return a;
    case Space::simplex:
      return simplex_canonical(a);
    case Space::sphere:
      return sphere_canonical(a);
  }
  throw ConsistencyError("unreachable context space");
}

Form reduce_mod(const Form& a, const QuotientContext& ctx) {
  require_ctx_dim(a, ctx);
  switch (ctx.space()) {
    case Space::ambient:
      return a;
    case Space::simplex:
      return simplex_canonical(a);
    case Space::sphere:
      return sphere_reduce(a, false);
  }
  throw ConsistencyError("unreachable context space");
}

Form minimal_representative(const Form& a, const QuotientContext& ctx,
                            bool keep_input_on_tie) {
  require_ctx_dim(a, ctx);
  if (ctx.space() != Space::sphere) return reduce_mod(a, ctx);
  return sphere_reduce(a, keep_input_on_tie);
}

std::vector<std::vector<Rational>> sample_points(const QuotientContext& ctx, int count) {
  const int n = ctx.n();
  const int N = ctx.nvars();
  std::set<std::vector<Rational>> seen;
  std::vector<std::vector<Rational>> pts;
  auto push = [&](const std::vector<Rational>& p) {
    if (static_cast<int>(pts.size()) >= count) return;
    if (seen.insert(p).second) pts.push_back(p);
  };

  std::mt19937 rng(0x51d3u + 977u * static_cast<unsigned>(ctx.space()) +
                   31u * static_cast<unsigned>(n));

  if (ctx.space() == Space::sphere) {
    // structured: stereographic images of every vector with entries in
    // {0, 1, -1}; this hits all poles and both hemispheres.
    const int total = 1;
    int span = 1;
    for (int i = 0; i < n; ++i) span *= 3;
    (void)total;
    for (int code = 0; code < span && static_cast<int>(pts.size()) < count; ++code) {
      int c = code;
      std::vector<Rational> a(n);
      for (int j = 0; j < n; ++j) {
        const int digit = c % 3;
        c /= 3;
        a[j] = digit == 0 ? Rational(0) : (digit == 1 ? Rational(1) : Rational(-1));
      }
      push(stereographic(a));
    }
    for (long attempts = 0;
         static_cast<int>(pts.size()) < count && attempts < 40L * count + 4000;
         ++attempts) {
      std::vector<Rational> a(n);
      for (int j = 0; j < n; ++j) a[j] = draw_rational(rng, false);
      push(stereographic(a));
    }
    return pts;
  }

  if (ctx.space() == Space::simplex) {
    for (int j = 1; j <= N && static_cast<int>(pts.size()) < count; ++j) {
      std::vector<Rational> v(N, Rational(0));
      v[j - 1] = 1;
      push(v);
    }
    push(std::vector<Rational>(N, make_rational(1, N)));
    for (long attempts = 0;
         static_cast<int>(pts.size()) < count && attempts < 40L * count + 4000;
         ++attempts) {
      std::vector<Rational> p(N);
      Rational s = 0;
      for (int j = 0; j < n; ++j) {
        p[j] = draw_rational(rng, false);
        s += p[j];
      }
      p[N - 1] = 1 - s;
      push(p);
    }
    return pts;
  }

  push(std::vector<Rational>(N, Rational(0)));
  for (int j = 1; j <= N && static_cast<int>(pts.size()) < count; ++j) {
    std::vector<Rational> v(N, Rational(0));
    v[j - 1] = 1;
    push(v);
    v[j - 1] = -1;
    push(v);
  }
  for (long attempts = 0;
       static_cast<int>(pts.size()) < count && attempts < 40L * count + 4000;
       ++attempts) {
    std::vector<Rational> p(N);
    for (int j = 0; j < N; ++j) p[j] = draw_rational(rng, false);
    push(p);
  }
  return pts;
}

std::vector<std::vector<Rational>> gamma_sphere_points(int n, int i, int count) {
  const int N = n + 1;
  if (i < 1 || i > N) throw DimensionError("slice index out of range");
  std::set<std::vector<Rational>> seen;
  std::vector<std::vector<Rational>> pts;
  auto push = [&](std::vector<Rational> sub) {
    if (static_cast<int>(pts.size()) >= count) return;
    // sub is a unit vector in the coordinates other than i
    std::vector<Rational> p(N);
    int s = 0;
    for (int j = 0; j < N; ++j) p[j] = (j == i - 1) ? Rational(0) : sub[s++];
    if (seen.insert(p).second) pts.push_back(std::move(p));
  };
  if (n == 1) {
    // the slice is two antipodal points on the remaining axis
    push({Rational(1)});
    push({Rational(-1)});
    return pts;
  }
  std::mt19937 rng(0x6a33au + 101u * static_cast<unsigned>(n) +
                   7u * static_cast<unsigned>(i));
  int span = 1;
  for (int j = 0; j < n - 1; ++j) span *= 3;
  for (int code = 0; code < span && static_cast<int>(pts.size()) < count; ++code) {
    int c = code;
    std::vector<Rational> a(n - 1);
    for (int j = 0; j < n - 1; ++j) {
      const int digit = c % 3;
      c /= 3;
      a[j] = digit == 0 ? Rational(0) : (digit == 1 ? Rational(1) : Rational(-1));
    }
    push(stereographic(a));
  }
  for (long attempts = 0;
       static_cast<int>(pts.size()) < count && attempts < 40L * count + 4000;
       ++attempts) {
    std::vector<Rational> a(n - 1);
    for (int j = 0; j < n - 1; ++j) a[j] = draw_rational(rng, false);
    push(stereographic(a));
  }
  return pts;
}

std::vector<std::vector<Rational>> tangent_frame(const QuotientContext& ctx,
                                                 const std::vector<Rational>& point) {
  const int n = ctx.n();
  const int N = ctx.nvars();
  if (static_cast<int>(point.size()) != N)
    throw DimensionError("point has wrong dimension for context");
  std::vector<std::vector<Rational>> frame;
  if (ctx.space() == Space::ambient) {
    for (int j = 0; j < N; ++j) {
      std::vector<Rational> v(N, Rational(0));
      v[j] = 1;
      frame.push_back(std::move(v));
    }
    return frame;
  }
  if (ctx.space() == Space::simplex) {
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> v(N, Rational(0));
      v[j] = 1;
      v[N - 1] = -1;
      frame.push_back(std::move(v));
    }
    return frame;
  }
  int m = 0;
  for (int j = 1; j < N; ++j)
    if (abs(point[j]) > abs(point[m])) m = j;
  if (point[m] == 0) throw CoordinateError("sphere tangent frame needs a nonzero coordinate");
  for (int j = 0; j < N; ++j) {
    if (j == m) continue;
    std::vector<Rational> v(N, Rational(0));
    v[j] = 1;
    v[m] = -point[j] / point[m];
    frame.push_back(std::move(v));
  }
  return frame;
}

Rational form_value(const Form& a, const std::vector<Rational>& point,
                    const std::vector<std::vector<Rational>>& vectors) {
  const int k = a.degree();
  if (static_cast<int>(vectors.size()) != k)
    throw DegreeError("form degree and vector count differ");
  Rational total = 0;
  for (const auto& [I, q] : a.coeffs()) {
    const auto idx = I.indices();
    std::vector<std::vector<Rational>> M(k, std::vector<Rational>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) M[r][c] = vectors[r][idx[c] - 1];
    const Rational d = k == 0 ? Rational(1) : small_det(M);
    if (d != 0) total += q.eval(point) * d;
  }
  return total;
}

bool full_tensor_vanishes(const Form& a, const std::vector<Rational>& point) {
  for (const auto& [I, q] : a.coeffs())
    if (q.eval(point) != 0) return false;
  return true;
}

bool is_zero_on(const Form& a, const QuotientContext& ctx) {
  require_ctx_dim(a, ctx);
  const bool symbolic = ideal_normal_form(a, ctx).is_zero();

  const int budget =
      std::min(160, std::max(48, 12 * (a.poly_degree() + a.degree() + 1)));
  const auto pts = sample_points(ctx, budget);
  const int k = a.degree();
  const int mdim = ctx.space() == Space::ambient ? ctx.nvars() : ctx.n();
  bool pointwise = true;
  for (const auto& p : pts) {
    if (k > mdim) break;  // no k-tuples of tangent vectors; trivially zero
    const auto frame = tangent_frame(ctx, p);
    for (const IndexSet& sel : index_sets(mdim, k)) {
      std::vector<std::vector<Rational>> vecs;
      for (int j : sel.indices()) vecs.push_back(frame[j - 1]);
      if (form_value(a, p, vecs) != 0) {
        pointwise = false;
        break;
      }
    }
    if (!pointwise) break;
  }

  if (pointwise == symbolic) {
    ++g_agree;
    return symbolic;
  }
  ++g_disagree;
  std::ostringstream os;
  os << "zero test disagreement: symbolic says " << (symbolic ? "zero" : "nonzero")
     << " but sampled evaluation says " << (pointwise ? "zero" : "nonzero");
  throw ConsistencyError(os.str());
}

bool equal_mod(const Form& a, const Form& b, const QuotientContext& ctx) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("cannot compare forms with different ambient dimensions");
  if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
    return is_zero_on(a, ctx) && is_zero_on(b, ctx);
  return is_zero_on(a - b, ctx);
}

ZeroCheckStats zero_check_stats() { return {g_agree.load(), g_disagree.load()}; }

void reset_zero_check_stats() {
  g_agree = 0;
  g_disagree = 0;
}

}  // namespace polyform
