#pragma once

#include <cstdint>
#include <vector>

#include "cocycle/mat2.hpp"

namespace cocycle {

/// Flags an abnormally good low-denominator rational approximation of
/// alpha/(2*pi): some continued-fraction convergent p/q with q <= 1e6 has
/// quality q^2 * |alpha/(2*pi) - p/q| below 1e-3. Advisory only.
struct DiophantineReport {
  bool suspicious = false;
  std::int64_t denominator = 0;
  double error = 0.0;
};

/// Circle rotation x -> x + alpha on R/(2*pi)Z with start point x0.
class RotationBase {
 public:
  explicit RotationBase(double alpha, double x0 = 0.0);

  double alpha() const { return alpha_; }
  double x0() const { return x0_; }
  const DiophantineReport& diophantine() const { return diophantine_; }

  /// 2*pi*(sqrt(5)-1)/2, the default rotation number.
  static double golden_alpha();

 private:
  double alpha_;
  double x0_;
  DiophantineReport diophantine_;
};

/// Driven matrix family over the circle. Two kinds:
///  - HermanExample(c): A(x) = rotation(x) * diag(c, 1/c), c > 0, c != 1.
///    Satisfies rotation(theta) * A(x) = A(x + theta), and over an
///    irrational rotation the exponent is log((c + 1/c)/2) in closed form.
///  - TableDriven: piecewise-constant in x over equal bins of [0, 2*pi).
class CocycleSpec {
 public:
  enum class Kind { HermanExample, TableDriven };

  static CocycleSpec herman_example(double c);
  static CocycleSpec table_driven(std::vector<Mat2> bins);

  Kind kind() const { return kind_; }
  double c() const;
  const std::vector<Mat2>& bins() const;

 private:
  CocycleSpec(Kind kind, double c, std::vector<Mat2> bins);

  Kind kind_;
  double c_;
  std::vector<Mat2> bins_;
};

/// The fiber matrix A(x).
Mat2 cocycle_step(const CocycleSpec& spec, double x);

/// Top Lyapunov exponent estimate: log of the operator norm of the orbit
/// product over `iterations` steps, divided by the step count, with the
/// running product renormalized every `renorm_every` steps to avoid
/// overflow. iterations >= 1000.
double lyapunov_estimate(const RotationBase& base, const CocycleSpec& spec,
                         std::int64_t iterations, int renorm_every = 16);

struct FamilyResult {
  double average;
  std::vector<double> per_theta;
};

/// Exponent estimates for the rotated family theta -> rotation(theta)*A(.)
/// on an equispaced theta grid over [0, 2*pi), plus their equal-weight
/// average. Nodes may run concurrently; the reduction order is fixed.
FamilyResult family_average(const RotationBase& base, const CocycleSpec& spec,
                            std::size_t theta_nodes, std::int64_t iterations);

/// Birkhoff average of log((|A(x)| + |A(x)|^-1)/2) along the base orbit.
/// samples >= 1000.
double herman_integral(const RotationBase& base, const CocycleSpec& spec,
                       std::int64_t samples);

}  // namespace cocycle
