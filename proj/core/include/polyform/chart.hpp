#pragma once

#include "polyform/context.hpp"
#include "polyform/form.hpp"

namespace polyform {

// Pullback under the coordinate square map x_i = u_i^2: a term r(x) dx_I
// becomes 2^k u_I r(u^2) du_I. Every image form is reflection-even.
Form phi_pullback(const Form& a);

// Inverse of phi_pullback on even forms: each coefficient must be divisible
// by its index monomial u_I (checked first, over all terms), and the
// quotient must have only even exponents (checked second). The 2^k scale is
// undone exactly.
Form phi_pushdown(const Form& alpha);

// Extended sphere Hodge star: the Euclidean star of nu ^ alpha. On the unit
// sphere it agrees with the metric star of the tangential restriction, so as
// a map of restriction classes it only sees the class of alpha. Applying it
// twice returns (-1)^{k(n-k)} times the input, modulo the sphere ideal, for
// inputs whose radial contraction lies in the ideal.
Form hodge_sphere(const Form& alpha);

// Sign relating the positively oriented chart (x_1..x_n) on the simplex to
// the image of the outward-oriented positive sphere octant under the square
// map. The square map's chart jacobian is a positive multiple of the
// identity orientation, and moving the outward normal past the chart frame
// costs (-1)^n; verified against explicit volume computations for n <= 3 and
// enforced for all swept n by the positivity tests on pairing matrices.
inline Rational simplex_orientation_sign(int n) {
  return (n % 2) ? Rational(-1) : Rational(1);
}

// Pointwise duality isomorphism between simplex forms and their mirror
// spaces. Forward: pull a back to the sphere, apply hodge_sphere, re-express
// each parity component at a strictly smaller degree when one exists (inputs
// already of minimal degree pass through verbatim), multiply by the bubble
// u_1...u_{n+1}, push back down, and apply the orientation sign. Inverse:
// pull back, solve the bubble factorization bubble * tau = image modulo the
// sphere ideal at the smallest slot degree (a structure error when no
// solution exists, which signals an input outside the advertised space),
// undo the star with the (-1)^{k(n-k)} double-star sign, reduce, push down,
// and apply the same orientation sign. The two directions compose to the
// identity modulo the simplex ideal.
Form duality_map(const Form& a, bool inverse = false);

}  // namespace polyform
