#pragma once

#include "cocycle/mat2.hpp"

namespace cocycle {

/// Reduce an angle to the canonical fundamental domain [0, pi).
double wrap_pi(double t);

/// Reduce an angle to the symmetric fundamental domain (-pi/2, pi/2].
double symmetric_mod_pi(double t);

/// Distance on R/(pi Z); always in [0, pi/2].
double circle_dist_pi(double s, double t);

/// A point of the projective line P^1 = R/(pi Z), stored as its canonical
/// angle in [0, pi). The line through angle p has direction (cos p, sin p).
class ProjPoint {
 public:
  explicit ProjPoint(double angle);

  double angle() const { return angle_; }
  Vec2 direction() const;

 private:
  double angle_;
};

/// Distance between two projective points, in [0, pi/2].
double dist(ProjPoint p, ProjPoint q);

/// Projective point spanned by a nonzero vector.
ProjPoint proj_of_vector(Vec2 v);

/// Projective action: the line through m * v_p.
ProjPoint phi(const Mat2& m, ProjPoint p);

/// Derivative of the projective action, 1 / |m v_p|^2. Positive; equal to 1
/// for rotations.
double phi_deriv(const Mat2& m, ProjPoint p);

/// Rotation displacement p - phi(m, p) as the representative in
/// (-pi/2, pi/2]. rotation(h(m, p)) * m has v_p as an eigenvector.
double h(const Mat2& m, ProjPoint p);

/// Fiber expansion rate log |m v_p| = -0.5 * log(phi_deriv(m, p)).
double rho_fn(const Mat2& m, ProjPoint p);

/// The projective involution attached to m: with m = S D R (SVD, D =
/// diag(lambda, 1/lambda), lambda > 1) it is the action of
/// R^-1 [[0, 1/lambda], [lambda, 0]] R. It satisfies
///   involution(involution(p)) = p,
///   h(m, .) is invariant under it,
///   rho_fn(m, .) is odd under it,
///   its derivative is -phi_deriv(m, .).
/// Orthogonal input (operator norm <= 1 + kOrthogonalTol) has no usable
/// axis and throws std::domain_error.
ProjPoint involution(const Mat2& m, ProjPoint p);

}  // namespace cocycle
