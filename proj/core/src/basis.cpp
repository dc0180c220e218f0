#include "polyform/basis.hpp"

#include <utility>

#include "polyform/errors.hpp"
#include "polyform/linalg.hpp"

namespace polyform {

namespace {

void require_context(int n, const QuotientContext& ctx, const char* where) {
  if (ctx.n() != n) throw DimensionError(std::string(where) + ": n does not match the context");
}

// The advertised degree range: k up to the manifold dimension, with the full
// exterior algebra only in the ambient context.
void require_degree_range(int n, int k, const QuotientContext& ctx, const char* where) {
  const int k_max = ctx.space() == Space::ambient ? n + 1 : n;
  if (k < 0 || k > k_max)
    throw DimensionError(std::string(where) + ": form degree out of range for the context");
}

// Monomial-form generators m dx_I, |m| <= r, emitted in ascending degree so
// that pruning keeps the lowest-degree spanning set. Within one degree the
// index-set order is outer and the term order inner, matching the slot order
// used by the sphere reducer. An empty range (negative r, k outside [0, N])
// yields no generators rather than an error; flavor-level preconditions are
// the callers' business.
std::vector<Form> monomial_candidates(int N, int r, int k, const uint32_t* grade) {
  std::vector<Form> out;
  if (r < 0 || k < 0 || k > N) return out;
  const auto sets = index_sets(N, k);
  for (int d = 0; d <= r; ++d) {
    const auto mons = monomials_of_degree(N, d);
    for (const auto& I : sets)
      for (const auto& m : mons) {
        if (grade && term_grade(m, I) != *grade) continue;
        out.push_back(Form::monomial_form(m, Rational(1), I));
      }
  }
  return out;
}

std::vector<Form> interior_radial(int N, const std::vector<Form>& gens) {
  PolyVectorField U = radial_field(N);
  std::vector<Form> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    Form c = interior_product(U, g);
    if (!c.is_zero()) out.push_back(c);
  }
  return out;
}

// Kernel of a linear map given by images of the candidates: every dependent
// image row yields one kernel element candidate - combo of earlier
// candidates. The results are unitriangular over an independent family, so
// they need no second pruning pass.
std::vector<Form> kernel_of_images(const std::vector<Form>& candidates,
                                   const std::vector<SparseVec>& images) {
  Eliminator elim;
  std::vector<Form> reps;
  for (size_t j = 0; j < candidates.size(); ++j) {
    auto res = elim.add_row(images[j]);
    if (res.independent) continue;
    Form v = candidates[j];
    for (const auto& [i, c] : res.combo) v = v - candidates[i] * c;
    reps.push_back(v);
  }
  return reps;
}

SpaceBasis vanishing_trace_subspace(const SpaceBasis& inner, Flavor flavor) {
  const int N = inner.context.nvars();
  // One indexer per face, spliced into a single row with disjoint column
  // ranges. Per-face column counts stay far below the stride at desk scale.
  const int stride = 1 << 24;
  std::vector<FormIndexer> face_cols(N);
  std::vector<SparseVec> images;
  images.reserve(inner.representatives.size());
  for (const auto& b : inner.representatives) {
    SparseVec row;
    for (int i = 1; i <= N; ++i) {
      SparseVec v = face_cols[i - 1].to_sparse(trace_to_face(b, i));
      for (const auto& [c, val] : v) row[(i - 1) * stride + c] = val;
    }
    images.push_back(std::move(row));
  }
  return SpaceBasis{inner.context, inner.n, inner.r, inner.k, flavor,
                    kernel_of_images(inner.representatives, images)};
}

}  // namespace

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::P: return "P";
    case Flavor::Pminus: return "Pminus";
    case Flavor::ring_P: return "ring_P";
    case Flavor::ring_Pminus: return "ring_Pminus";
    case Flavor::ringring_P: return "ringring_P";
    case Flavor::ringring_Pminus: return "ringring_Pminus";
    case Flavor::P_even: return "P_even";
    case Flavor::P_odd: return "P_odd";
    case Flavor::Pminus_even: return "Pminus_even";
    case Flavor::Pminus_odd: return "Pminus_odd";
  }
  return "?";
}

std::optional<Flavor> flavor_from_name(const std::string& name) {
  static const Flavor all[] = {
      Flavor::P,          Flavor::Pminus,      Flavor::ring_P,
      Flavor::ring_Pminus, Flavor::ringring_P, Flavor::ringring_Pminus,
      Flavor::P_even,     Flavor::P_odd,       Flavor::Pminus_even,
      Flavor::Pminus_odd,
  };
  for (Flavor f : all)
    if (name == flavor_name(f)) return f;
  return std::nullopt;
}

std::vector<Form> prune_span(const std::vector<Form>& candidates,
                             const QuotientContext& ctx) {
  FormIndexer cols;
  Eliminator elim;
  std::vector<Form> kept;
  for (const auto& c : candidates)
    if (elim.add_row(cols.to_sparse(ideal_normal_form(c, ctx))).independent)
      kept.push_back(c);
  return kept;
}

int span_rank(const std::vector<Form>& forms, const QuotientContext& ctx) {
  FormIndexer cols;
  Eliminator elim;
  for (const auto& f : forms) elim.add_row(cols.to_sparse(ideal_normal_form(f, ctx)));
  return elim.rank();
}

SpaceBasis basis_P(int n, int r, int k, const QuotientContext& ctx) {
  require_context(n, ctx, "basis_P");
  require_degree_range(n, k, ctx, "basis_P");
  if (r < 0) throw DegreeError("basis_P: r must be nonnegative");
  auto cands = monomial_candidates(ctx.nvars(), r, k, nullptr);
  return SpaceBasis{ctx, n, r, k, Flavor::P, prune_span(cands, ctx)};
}

SpaceBasis basis_Pminus(int n, int r, int k, const QuotientContext& ctx) {
  require_context(n, ctx, "basis_Pminus");
  require_degree_range(n, k, ctx, "basis_Pminus");
  if (r < 1) throw DegreeError("basis_Pminus: r must be at least 1");
  auto cands = interior_radial(ctx.nvars(),
                               monomial_candidates(ctx.nvars(), r - 1, k + 1, nullptr));
  return SpaceBasis{ctx, n, r, k, Flavor::Pminus, prune_span(cands, ctx)};
}

SpaceBasis basis_Pminus_afw(int n, int r, int k, const QuotientContext& ctx) {
  require_context(n, ctx, "basis_Pminus_afw");
  require_degree_range(n, k, ctx, "basis_Pminus_afw");
  if (ctx.space() != Space::simplex)
    throw StructureError("basis_Pminus_afw: the Koszul description lives on the simplex");
  if (r < 1) throw DegreeError("basis_Pminus_afw: r must be at least 1");
  const int N = ctx.nvars();
  // Raw monomial generators for the kappa summand: at k = n the (k+1)-form
  // generators are the ambient top forms, which basis_P deliberately refuses
  // to hand out for a manifold context.
  std::vector<Form> cands = basis_P(n, r - 1, k, ctx).representatives;
  PolyVectorField vk = kappa_field(N);
  for (const auto& b : monomial_candidates(N, r - 1, k + 1, nullptr)) {
    Form c = interior_product(vk, b);
    if (!c.is_zero()) cands.push_back(c);
  }
  return SpaceBasis{ctx, n, r, k, Flavor::Pminus, prune_span(cands, ctx)};
}

SpaceBasis basis_ring(int n, int r, int k) {
  if (r < 1) throw DegreeError("basis_ring: r must be at least 1");
  return vanishing_trace_subspace(basis_P(n, r, k, QuotientContext::simplex(n)),
                                  Flavor::ring_P);
}

SpaceBasis basis_ring_minus(int n, int r, int k) {
  if (r < 1) throw DegreeError("basis_ring_minus: r must be at least 1");
  return vanishing_trace_subspace(basis_Pminus(n, r, k, QuotientContext::simplex(n)),
                                  Flavor::ring_Pminus);
}

SpaceBasis basis_ringring(int n, int s, int k, const QuotientContext& ctx) {
  require_context(n, ctx, "basis_ringring");
  require_degree_range(n, k, ctx, "basis_ringring");
  if (ctx.space() == Space::simplex)
    throw StructureError("basis_ringring: double-ring spaces live on ambient space or the sphere");
  const int N = ctx.nvars();
  std::vector<Form> cands;
  if (ctx.space() == Space::sphere && k == n && s >= n) {
    // Volume class: the only member with no bubble-divisible representative.
    // Its minimal-degree form omits u_1 entirely.
    std::vector<int> e(N, 1);
    e[0] = 0;
    cands.push_back(Form::monomial_form(Monomial(e), Rational(1),
                                        IndexSet::full(N).without(1)));
  }
  if (s - n - 1 >= 0) {
    Polynomial uN = bubble(N);
    for (const auto& b : basis_P(n, s - n - 1, k, ctx).representatives)
      cands.push_back(b * uN);
  }
  return SpaceBasis{ctx, n, s, k, Flavor::ringring_P, prune_span(cands, ctx)};
}

SpaceBasis basis_ringring_minus(int n, int s, int k, const QuotientContext& ctx) {
  require_context(n, ctx, "basis_ringring_minus");
  require_degree_range(n, k, ctx, "basis_ringring_minus");
  if (ctx.space() == Space::simplex)
    throw StructureError("basis_ringring_minus: double-ring spaces live on ambient space or the sphere");
  const int N = ctx.nvars();
  Polynomial uN = bubble(N);
  std::vector<Form> cands;
  if (ctx.space() == Space::ambient) {
    // bubble * ker i_U; the kernel at k = 0 is all of P, which carries the
    // constant summand with it.
    if (s - n - 1 >= 0)
      for (const auto& b : kernel_iU(n, s - n - 1, k).representatives)
        cands.push_back(b * uN);
  } else {
    if (k == 0 && s >= n + 1) cands.push_back(Form::from_scalar(uN));
    if (s - n - 1 >= 1)
      for (const auto& b : basis_Pminus(n, s - n - 1, k, ctx).representatives)
        cands.push_back(b * uN);
  }
  return SpaceBasis{ctx, n, s, k, Flavor::ringring_Pminus, prune_span(cands, ctx)};
}

SpaceBasis basis_parity(int n, int s, int k, const QuotientContext& ctx,
                        bool pminus, bool even) {
  require_context(n, ctx, "basis_parity");
  require_degree_range(n, k, ctx, "basis_parity");
  if (ctx.space() == Space::simplex)
    throw StructureError("basis_parity: coordinate reflections do not preserve the simplex");
  const int N = ctx.nvars();
  const uint32_t grade = even ? 0u : IndexSet::full(N).bits();
  std::vector<Form> cands;
  Flavor flavor;
  if (pminus) {
    if (s < 1) throw DegreeError("basis_parity: the trimmed family needs s >= 1");
    cands = interior_radial(N, monomial_candidates(N, s - 1, k + 1, &grade));
    flavor = even ? Flavor::Pminus_even : Flavor::Pminus_odd;
  } else {
    if (s < 0) throw DegreeError("basis_parity: s must be nonnegative");
    cands = monomial_candidates(N, s, k, &grade);
    flavor = even ? Flavor::P_even : Flavor::P_odd;
  }
  return SpaceBasis{ctx, n, s, k, flavor, prune_span(cands, ctx)};
}

SpaceBasis make_basis(int n, int r, int k, Flavor f, const QuotientContext& ctx) {
  switch (f) {
    case Flavor::P: return basis_P(n, r, k, ctx);
    case Flavor::Pminus: return basis_Pminus(n, r, k, ctx);
    case Flavor::ring_P:
    case Flavor::ring_Pminus:
      if (ctx.space() != Space::simplex)
        throw StructureError("make_basis: vanishing-trace spaces live on the simplex");
      return f == Flavor::ring_P ? basis_ring(n, r, k) : basis_ring_minus(n, r, k);
    case Flavor::ringring_P: return basis_ringring(n, r, k, ctx);
    case Flavor::ringring_Pminus: return basis_ringring_minus(n, r, k, ctx);
    case Flavor::P_even: return basis_parity(n, r, k, ctx, false, true);
    case Flavor::P_odd: return basis_parity(n, r, k, ctx, false, false);
    case Flavor::Pminus_even: return basis_parity(n, r, k, ctx, true, true);
    case Flavor::Pminus_odd: return basis_parity(n, r, k, ctx, true, false);
  }
  throw StructureError("make_basis: unknown flavor");
}

Form trace_to_face(const Form& a, int i) {
  const int N = a.ambient_dim();
  if (i < 1 || i > N) throw DimensionError("trace_to_face: face index out of range");
  // Substitute x_i = 0 and drop dx_i terms.
  Form cut(N, a.degree());
  const Polynomial zero = Polynomial::constant(N, Rational(0));
  for (const auto& [I, p] : a.coeffs()) {
    if (I.contains(i)) continue;
    Polynomial q = p.substitute(i, zero);
    if (!q.is_zero()) cut.add_term(I, q);
  }
  // Face canonical form: eliminate the lowest surviving coordinate m via
  // x_m = 1 - sum of the others and dx_m = -sum of the others. m heads every
  // index set containing it, so the replacement needs no repositioning sign.
  const int m = (i == 1) ? 2 : 1;
  Form rewoven(N, a.degree());
  for (const auto& [I, p] : cut.coeffs()) {
    if (!I.contains(m)) {
      rewoven.add_term(I, p);
      continue;
    }
    IndexSet base = I.without(m);
    for (int j = 1; j <= N; ++j) {
      if (j == i || j == m || base.contains(j)) continue;
      int sgn = merge_sign(IndexSet{j}, base);
      rewoven.add_term(base.with(j), p * Rational(-sgn));
    }
  }
  Polynomial sub = Polynomial::constant(N, Rational(1));
  for (int j = 1; j <= N; ++j)
    if (j != i && j != m) sub = sub - Polynomial::variable(N, j);
  Form out(N, a.degree());
  for (const auto& [I, p] : rewoven.coeffs()) {
    Polynomial q = p.substitute(m, sub);
    if (!q.is_zero()) out.add_term(I, q);
  }
  return out;
}

std::optional<std::vector<Rational>> membership(const Form& alpha,
                                                const SpaceBasis& basis) {
  if (!alpha.is_zero() && alpha.degree() != basis.k)
    throw DimensionError("membership: form degree mismatch");
  return membership(alpha, basis.representatives, basis.context);
}

std::optional<std::vector<Rational>> membership(const Form& alpha,
                                                const std::vector<Form>& span,
                                                const QuotientContext& ctx) {
  if (alpha.ambient_dim() != ctx.nvars())
    throw DimensionError("membership: ambient dimension mismatch");
  FormIndexer cols;
  Eliminator elim;
  for (const auto& b : span) elim.add_row(cols.to_sparse(ideal_normal_form(b, ctx)));
  std::map<int, Rational> combo;
  SparseVec res = elim.reduce(cols.to_sparse(ideal_normal_form(alpha, ctx)), &combo);
  if (!res.empty()) return std::nullopt;
  // Provenance indices are fed-row indices, which match positions in span.
  std::vector<Rational> coords(span.size(), Rational(0));
  for (const auto& [j, c] : combo) coords[static_cast<size_t>(j)] = c;
  return coords;
}

SpaceBasis kernel_iU(int n, int s, int k) {
  QuotientContext ctx = QuotientContext::ambient(n);
  const int N = ctx.nvars();
  std::vector<Form> reps;
  if (s >= 0 && k >= 0 && k <= N) {
    auto cands = monomial_candidates(N, s, k, nullptr);
    PolyVectorField U = radial_field(N);
    FormIndexer cols;
    std::vector<SparseVec> images;
    images.reserve(cands.size());
    for (const auto& c : cands)
      images.push_back(cols.to_sparse(interior_product(U, c)));
    reps = kernel_of_images(cands, images);
  }
  return SpaceBasis{ctx, n, s, k, Flavor::Pminus, std::move(reps)};
}

bool equal_spans(const SpaceBasis& A, const SpaceBasis& B) {
  if (A.context.space() != B.context.space() ||
      A.context.nvars() != B.context.nvars() || A.k != B.k)
    throw DimensionError("equal_spans: incompatible bases");
  const QuotientContext& ctx = A.context;
  FormIndexer cols;
  Eliminator elim;
  for (const auto& f : A.representatives)
    elim.add_row(cols.to_sparse(ideal_normal_form(f, ctx)));
  const int ra = elim.rank();
  for (const auto& f : B.representatives)
    elim.add_row(cols.to_sparse(ideal_normal_form(f, ctx)));
  const int rab = elim.rank();
  return ra == rab && span_rank(B.representatives, ctx) == rab;
}

long classical_dim(Flavor f, const QuotientContext& ctx, int n, int r, int k) {
  auto C = [](long a, long b) -> long {
    return static_cast<long>(binomial(a, b));
  };
  if (ctx.space() == Space::simplex) {
    if (k < 0 || k > n || r < 0) {
      // Out-of-range form degree is the zero space for every simplex flavor
      // with a formula; stay silent otherwise.
      if (f == Flavor::P || f == Flavor::Pminus || f == Flavor::ring_P ||
          f == Flavor::ring_Pminus)
        return 0;
      return -1;
    }
    switch (f) {
      case Flavor::P: return C(r + n, n) * C(n, k);
      case Flavor::Pminus: return C(r + k - 1, k) * C(r + n, n - k);
      case Flavor::ring_P: return C(r - 1, n - k) * C(r + k, k);
      case Flavor::ring_Pminus: return C(r + k - 1, n) * C(n, k);
      default: return -1;
    }
  }
  if (ctx.space() == Space::ambient && f == Flavor::P) {
    // No formula is claimed for ambient Pminus: the literature's binomial
    // count describes the affine simplex family, which contains P_{r-1} as a
    // summand, not the bare radial contraction image used here.
    const long N = n + 1;
    if (k < 0 || k > N || r < 0) return 0;
    return C(r + N, N) * C(N, k);
  }
  return -1;
}

}  // namespace polyform
