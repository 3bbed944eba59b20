#include "cocycle/mat2.hpp"

#include <string>

namespace cocycle {

namespace {

void check_unit_det(double a, double b, double c, double d) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
        std::isfinite(d))) {
    throw std::invalid_argument("Mat2: non-finite entry");
  }
  const double det = a * d - b * c;
  const double scale = a * a + b * b + c * c + d * d;
  const double tol = kDetTol * (scale > 1.0 ? scale : 1.0);
  if (std::abs(det - 1.0) > tol) {
    throw std::invalid_argument("Mat2: determinant " + std::to_string(det) +
                                " violates the unit bound");
  }
}

}  // namespace

Mat2::Mat2(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  check_unit_det(a_, b_, c_, d_);
}

Mat2 Mat2::diagonal(double s) {
  if (!std::isfinite(s) || s == 0.0) {
    throw std::invalid_argument("Mat2::diagonal: s must be finite and nonzero");
  }
  return Mat2(s, 0.0, 0.0, 1.0 / s);
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
  const double a = a_ * rhs.a_ + b_ * rhs.c_;
  const double b = a_ * rhs.b_ + b_ * rhs.d_;
  const double c = c_ * rhs.a_ + d_ * rhs.c_;
  const double d = c_ * rhs.b_ + d_ * rhs.d_;
  return Mat2(a, b, c, d);
}

Mat2 rotation(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("rotation: non-finite angle");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Mat2(c, -s, s, c);
}

double max_abs_diff(const Mat2& lhs, const Mat2& rhs) {
  double m = std::abs(lhs.a() - rhs.a());
  m = std::max(m, std::abs(lhs.b() - rhs.b()));
  m = std::max(m, std::abs(lhs.c() - rhs.c()));
  m = std::max(m, std::abs(lhs.d() - rhs.d()));
  return m;
}

double operator_norm(const Mat2& m) {
  const double half = 0.5 * m.fnorm2();
  if (half <= 1.0) return 1.0;
  return std::sqrt(half + std::sqrt(half * half - 1.0));
}

double log_avg_norm(const Mat2& m) {
  return 0.5 * std::log((m.fnorm2() + 2.0) * 0.25);
}

double spectral_radius_log(const Mat2& m) {
  const double t = std::abs(m.trace());
  if (t <= 2.0) return 0.0;
  return std::log(0.5 * (t + std::sqrt(t * t - 4.0)));
}

ConjClass classify(const Mat2& m) {
  const double t = std::abs(m.trace());
  if (std::abs(t - 2.0) <= kParabolicTol) return ConjClass::Parabolic;
  return t < 2.0 ? ConjClass::Elliptic : ConjClass::Hyperbolic;
}

Svd2 svd2(const Mat2& m) {
  const double sigma_raw = operator_norm(m);
  if (sigma_raw <= 1.0 + 1e-12) {
    return Svd2{m, 1.0, Mat2::identity()};
  }

  // Leading eigenvector of A^T A, angle reduced to [0, pi).
  const double b11 = m.a() * m.a() + m.c() * m.c();
  const double b12 = m.a() * m.b() + m.c() * m.d();
  const double b22 = m.b() * m.b() + m.d() * m.d();
  double phi = 0.5 * std::atan2(2.0 * b12, b11 - b22);
  if (phi < 0.0) phi += kPi;

  const Mat2 r = rotation(-phi);
  const Mat2 s = m * rotation(phi) * Mat2::diagonal(1.0 / sigma_raw);
  return Svd2{s, sigma_raw, r};
}

}  // namespace cocycle
