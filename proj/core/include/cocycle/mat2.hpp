#pragma once

#include <cmath>
#include <stdexcept>

namespace cocycle {

inline constexpr double kPi = 3.14159265358979323846;

/// Floor of the unit-determinant tolerance. The effective bound scales with
/// the squared Frobenius norm of the matrix being checked, which is the
/// tightest bound double-precision products can actually hold.
inline constexpr double kDetTol = 1e-12;

/// |trace| window around 2 inside which a matrix counts as parabolic.
inline constexpr double kParabolicTol = 1e-10;

/// Matrices with operator norm within 1 + kOrthogonalTol are treated as
/// orthogonal (no usable singular-value gap).
inline constexpr double kOrthogonalTol = 1e-9;

/// Thrown when a computation (not its input) degrades past tolerance:
/// determinant drift in a product chain, solver non-convergence,
/// non-finite quadrature samples, overflow in an orbit product.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
};

/// Real 2x2 matrix with unit determinant, row-major [[a,b],[c,d]].
///
/// The determinant is validated on construction and re-validated after every
/// product; violations throw instead of being silently renormalized.
class Mat2 {
 public:
  Mat2(double a, double b, double c, double d);

  static Mat2 identity() { return Mat2(1.0, 0.0, 0.0, 1.0); }

  /// diag(s, 1/s) for any finite nonzero s.
  static Mat2 diagonal(double s);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  double trace() const { return a_ + d_; }
  double det() const { return a_ * d_ - b_ * c_; }

  /// Squared Frobenius norm; equals sigma^2 + sigma^-2, so always >= 2.
  double fnorm2() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

  Mat2 transpose() const { return Mat2(a_, c_, b_, d_); }

  /// Adjugate inverse [[d,-b],[-c,a]]; exact for unit determinant.
  Mat2 inverse() const { return Mat2(d_, -b_, -c_, a_); }

  Vec2 apply(Vec2 v) const {
    return Vec2{a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y};
  }

  Mat2 operator*(const Mat2& rhs) const;

 private:
  double a_, b_, c_, d_;
};

/// [[cos t, -sin t], [sin t, cos t]]; rejects non-finite angles.
Mat2 rotation(double theta);

/// Largest entrywise absolute difference, handy for reconstruction checks.
double max_abs_diff(const Mat2& lhs, const Mat2& rhs);

/// Largest singular value sigma >= 1. Computed from the Frobenius norm:
/// sigma^2 = m + sqrt(m^2 - 1) with m = |A|_F^2 / 2.
double operator_norm(const Mat2& m);

/// log((sigma + 1/sigma) / 2), evaluated stably as 0.5*log((|A|_F^2 + 2)/4).
/// Always >= 0, and exactly 0 for orthogonal input.
double log_avg_norm(const Mat2& m);

/// Log of the spectral radius: 0 when |trace| <= 2, otherwise
/// log((|trace| + sqrt(trace^2 - 4)) / 2).
double spectral_radius_log(const Mat2& m);

enum class ConjClass { Elliptic, Parabolic, Hyperbolic };

/// |trace| against 2 with the kParabolicTol window.
ConjClass classify(const Mat2& m);

/// A = s_factor * diag(sigma, 1/sigma) * r_factor with rotation factors.
struct Svd2 {
  Mat2 s_factor;
  double sigma;
  Mat2 r_factor;
};

/// Closed-form SVD. The factor choice is deterministic: r_factor is the
/// rotation sending the leading eigenvector of A^T A (angle taken in
/// [0, pi)) to the x-axis, and signs are absorbed into s_factor. Inputs
/// with sigma = 1 within 1e-12 return {A, 1, identity}.
Svd2 svd2(const Mat2& m);

}  // namespace cocycle
