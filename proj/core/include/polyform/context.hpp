#pragma once

#include <vector>

#include "polyform/form.hpp"

namespace polyform {

enum class Space { ambient, simplex, sphere };

// Where a form lives: flat R^{n+1}, the standard n-simplex inside the
// hyperplane x_1 + ... + x_{n+1} = 1, or the unit n-sphere. The simplex and
// sphere contexts carry the relation ideals that make two ambient forms
// represent the same object: (t - 1, dt) for the simplex and
// (|u|^2 - 1, nu) for the sphere.
class QuotientContext {
 public:
  static QuotientContext ambient(int n);
  static QuotientContext simplex(int n);
  static QuotientContext sphere(int n);

  Space space() const { return space_; }
  int n() const { return n_; }            // manifold dimension
  int nvars() const { return n_ + 1; }    // ambient coordinate count

 private:
  QuotientContext(Space s, int n);
  Space space_;
  int n_;
};

// Linear normal form whose kernel is exactly the relation ideal: the identity
// on ambient space; substitution of x_{n+1} = 1 - sum x_j and
// dx_{n+1} = -sum dx_j on the simplex; on the sphere, the unique
// representative that has u_{n+1}-degree at most one in every coefficient and
// whose radial contraction lies in (|u|^2 - 1). All rank and membership
// computations go through this map.
Form ideal_normal_form(const Form& a, const QuotientContext& ctx);

// Public canonical representative. Simplex and ambient agree with
// ideal_normal_form. On the sphere every reflection-parity component is
// re-expressed at the smallest possible polynomial degree, with ties inside
// one degree broken by index-set order then term order and unused slots
// pinned to zero. Idempotent, and zero exactly on the relation ideal.
Form reduce_mod(const Form& a, const QuotientContext& ctx);

// Degree-minimizing re-expression with a verbatim-keep escape hatch: when
// keep_input_on_tie is set, a parity component is only replaced if a
// representative of strictly smaller polynomial degree exists; otherwise the
// input terms pass through untouched. Non-sphere contexts fall back to
// reduce_mod (the keep flag has nothing to tie-break there).
Form minimal_representative(const Form& a, const QuotientContext& ctx,
                            bool keep_input_on_tie);

// True iff the form is the zero section of its bundle over the manifold.
// Decides symbolically through ideal_normal_form, then replays the verdict
// against exact evaluation at rational sample points; the two must agree, and
// a mismatch throws a consistency error (see zero_check_stats).
bool is_zero_on(const Form& a, const QuotientContext& ctx);

bool equal_mod(const Form& a, const Form& b, const QuotientContext& ctx);

// Deterministic rational points of the manifold: small structured points
// first (poles, vertices, sign patterns), then a fixed-seed pseudorandom
// tail with all-nonzero coordinates. Sphere points come from the rational
// parametrization u = (2a, 1 - |a|^2) / (1 + |a|^2), a in Q^n.
std::vector<std::vector<Rational>> sample_points(const QuotientContext& ctx, int count);

// Rational points of the slice u_i = 0 of the unit n-sphere.
std::vector<std::vector<Rational>> gamma_sphere_points(int n, int i, int count);

// Basis of the tangent space at a point: the full coordinate frame on
// ambient space, the constant frame e_j - e_{n+1} on the simplex hyperplane,
// and e_j - (u_j/u_m) e_m (m the largest-magnitude coordinate) on the sphere.
std::vector<std::vector<Rational>> tangent_frame(const QuotientContext& ctx,
                                                 const std::vector<Rational>& point);

// Exact value of a k-form on k tangent vectors at a point.
Rational form_value(const Form& a, const std::vector<Rational>& point,
                    const std::vector<std::vector<Rational>>& vectors);

// True iff every coefficient polynomial vanishes at the point, i.e. the full
// ambient tensor is zero there, not merely its tangential part.
bool full_tensor_vanishes(const Form& a, const std::vector<Rational>& point);

// Running tally of symbolic-vs-pointwise zero decisions. Any disagreement is
// also raised as a consistency error at the call site; the counters let test
// suites assert that the cross-check actually ran and never dissented.
struct ZeroCheckStats {
  long long agreements = 0;
  long long disagreements = 0;
};
ZeroCheckStats zero_check_stats();
void reset_zero_check_stats();

}  // namespace polyform
