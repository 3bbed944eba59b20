#include "cocycle/projective.hpp"

namespace cocycle {

double wrap_pi(double t) {
  double r = std::fmod(t, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r = 0.0;  // fmod can round the sum up to pi exactly
  return r;
}

double symmetric_mod_pi(double t) {
  double r = std::remainder(t, kPi);  // lands in [-pi/2, pi/2]
  if (r <= -0.5 * kPi) r += kPi;
  return r;
}

double circle_dist_pi(double s, double t) {
  return std::abs(std::remainder(s - t, kPi));
}

ProjPoint::ProjPoint(double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("ProjPoint: non-finite angle");
  }
  angle_ = wrap_pi(angle);
}

Vec2 ProjPoint::direction() const {
  return Vec2{std::cos(angle_), std::sin(angle_)};
}

double dist(ProjPoint p, ProjPoint q) {
  return circle_dist_pi(p.angle(), q.angle());
}

ProjPoint proj_of_vector(Vec2 v) {
  if (!(std::isfinite(v.x) && std::isfinite(v.y)) || (v.x == 0.0 && v.y == 0.0)) {
    throw std::invalid_argument("proj_of_vector: zero or non-finite vector");
  }
  return ProjPoint(std::atan2(v.y, v.x));
}

ProjPoint phi(const Mat2& m, ProjPoint p) {
  return proj_of_vector(m.apply(p.direction()));
}

double phi_deriv(const Mat2& m, ProjPoint p) {
  return 1.0 / m.apply(p.direction()).norm2();
}

double h(const Mat2& m, ProjPoint p) {
  return symmetric_mod_pi(p.angle() - phi(m, p).angle());
}

double rho_fn(const Mat2& m, ProjPoint p) {
  return std::log(m.apply(p.direction()).norm());
}

ProjPoint involution(const Mat2& m, ProjPoint p) {
  if (operator_norm(m) <= 1.0 + kOrthogonalTol) {
    throw std::domain_error("involution: matrix is orthogonal within tolerance");
  }
  const Svd2 f = svd2(m);
  const double lambda = f.sigma;
  // Angle of the rotation r_factor; applying it translates angles.
  const double r_angle = std::atan2(f.r_factor.c(), f.r_factor.a());
  const double t = p.angle() + r_angle;
  // K v_t with K = [[0, 1/lambda], [lambda, 0]], then rotate back.
  const double wx = std::sin(t) / lambda;
  const double wy = lambda * std::cos(t);
  const double ca = std::cos(r_angle);
  const double sa = std::sin(r_angle);
  return proj_of_vector(Vec2{wx * ca + wy * sa, -wx * sa + wy * ca});
}

}  // namespace cocycle
