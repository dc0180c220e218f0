#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyform/context.hpp"

namespace polyform {

// The families of polynomial form spaces handled by the library. P is the
// full polynomial family of coefficient degree at most r; Pminus its trimmed
// subfamily i_U P_{r-1}Lambda^{k+1}. The ring_* flavors impose vanishing
// boundary traces on the simplex. The ringring_* flavors impose vanishing of
// the full tensor (not just the tangential part) on every coordinate
// hyperplane; they live on ambient space or the sphere. The *_even / *_odd
// flavors are the reflection-parity subspaces, meaningful wherever every
// coordinate reflection preserves the manifold.
enum class Flavor {
  P,
  Pminus,
  ring_P,
  ring_Pminus,
  ringring_P,
  ringring_Pminus,
  P_even,
  P_odd,
  Pminus_even,
  Pminus_odd,
};

const char* flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(const std::string& name);

struct SpaceBasis {
  QuotientContext context;
  int n;  // manifold dimension
  int r;  // polynomial degree parameter of the family
  int k;  // form degree
  Flavor flavor;
  // Linearly independent modulo the context ideal; size equals the dimension
  // of the space. Representatives are kept in generation form (never
  // canonicalized), so low-degree members print the way they were built.
  std::vector<Form> representatives;

  int dim() const { return static_cast<int>(representatives.size()); }
};

// Maximal independent subset of candidates modulo the context ideal. Feed
// order is preserved and earlier candidates win ties, so generators should be
// listed in ascending degree.
std::vector<Form> prune_span(const std::vector<Form>& candidates,
                             const QuotientContext& ctx);

int span_rank(const std::vector<Form>& forms, const QuotientContext& ctx);

// Monomial forms x^a dx_I with |a| <= r, pruned modulo the context.
SpaceBasis basis_P(int n, int r, int k, const QuotientContext& ctx);

// i_U applied to the degree-(r-1) monomial (k+1)-form generators, pruned.
// Requires r >= 1.
SpaceBasis basis_Pminus(int n, int r, int k, const QuotientContext& ctx);

// The classical description on the simplex: P_{r-1}Lambda^k plus the Koszul
// image of P_{r-1}Lambda^{k+1} under the simplex-tangent projection of the
// radial field. Equality of this span with basis_Pminus is a checked theorem,
// not an assumption.
SpaceBasis basis_Pminus_afw(int n, int r, int k, const QuotientContext& ctx);

// Subspace of basis_P / basis_Pminus whose trace vanishes on every boundary
// face of the simplex. Requires r >= 1.
SpaceBasis basis_ring(int n, int r, int k);
SpaceBasis basis_ring_minus(int n, int r, int k);

// Double-ring spaces, degree parameter s. Ambient: bubble * P_{s-n-1}. On
// the sphere the bubble-divisible part is joined by one exceptional class in
// each of two corner cases: the volume class at k = n (representable at
// degree n, below the reach of any bubble multiple) and the bubble constant
// at k = 0 for the minus family (degree n+1). Both are pruned away
// automatically at large s where the generic part absorbs them.
SpaceBasis basis_ringring(int n, int s, int k, const QuotientContext& ctx);
SpaceBasis basis_ringring_minus(int n, int s, int k, const QuotientContext& ctx);

// Reflection-parity subspace of P (or Pminus when pminus is set): candidates
// are restricted to terms of grade zero (even) or the all-ones grade (odd)
// before pruning. Parity is termwise, so this exhausts the subspace.
SpaceBasis basis_parity(int n, int s, int k, const QuotientContext& ctx,
                        bool pminus, bool even);

// Dispatch by flavor; validates the flavor/context pairing.
SpaceBasis make_basis(int n, int r, int k, Flavor f, const QuotientContext& ctx);

// Pullback to the boundary face x_i = 0 of the simplex: substitute x_i = 0,
// drop dx_i terms, then canonicalize in the face's own simplex by eliminating
// the lowest surviving coordinate. Ideal members trace to zero, so traces are
// well defined on classes.
Form trace_to_face(const Form& a, int i);

// Exact coordinates of alpha in the basis modulo the context ideal, or
// nullopt when alpha is outside the span.
std::optional<std::vector<Rational>> membership(const Form& alpha,
                                                const SpaceBasis& basis);

// Same, against a raw spanning family (members need not be independent;
// coordinates land on the first independent subsequence, zeros elsewhere).
std::optional<std::vector<Rational>> membership(const Form& alpha,
                                                const std::vector<Form>& span,
                                                const QuotientContext& ctx);

// Exact nullspace of i_U : P_s Lambda^k(R^{n+1}) -> P_{s+1} Lambda^{k-1}.
SpaceBasis kernel_iU(int n, int s, int k);

bool equal_spans(const SpaceBasis& A, const SpaceBasis& B);

// Closed-form dimension from the classical finite element literature, used
// as an independent oracle; -1 when no formula applies to the flavor/context
// pair. Covers the four simplex flavors and ambient P. Ambient Pminus has no
// product formula (the affine count overshoots the homogeneous Koszul image).
long classical_dim(Flavor f, const QuotientContext& ctx, int n, int r, int k);

}  // namespace polyform
