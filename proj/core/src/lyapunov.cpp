#include "cocycle/lyapunov.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "cocycle/parallel.hpp"
#include "cocycle/quadrature.hpp"

namespace cocycle {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr std::int64_t kDenominatorBound = 1'000'000;
constexpr double kQualityBound = 1e-3;

DiophantineReport diophantine_scan(double alpha) {
  DiophantineReport report;
  double x = alpha / kTwoPi;
  x -= std::floor(x);
  if (x < 1e-15 || 1.0 - x < 1e-15) {
    report.suspicious = true;
    report.denominator = 1;
    report.error = 0.0;
    return report;
  }
  // Convergents p/q of [0; a1, a2, ...] by the standard recurrence.
  std::int64_t p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
  std::int64_t p_cur = 0, q_cur = 1;    // p_0/q_0
  double frac = x;
  for (int step = 0; step < 64; ++step) {
    if (frac < 1e-18) break;
    const double inv = 1.0 / frac;
    if (inv > 9e18) break;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    const std::int64_t p_next = a * p_cur + p_prev;
    const std::int64_t q_next = a * q_cur + q_prev;
    if (q_next > kDenominatorBound) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    frac = inv - static_cast<double>(a);
    const double q = static_cast<double>(q_cur);
    const double err = std::abs(x * q - static_cast<double>(p_cur)) / q;
    if (err * q * q < kQualityBound) {
      report.suspicious = true;
      report.denominator = q_cur;
      report.error = err;
      return report;
    }
  }
  return report;
}

}  // namespace

RotationBase::RotationBase(double alpha, double x0) : alpha_(alpha), x0_(x0) {
  if (!std::isfinite(alpha) || !std::isfinite(x0)) {
    throw std::invalid_argument("RotationBase: non-finite parameter");
  }
  diophantine_ = diophantine_scan(alpha_);
}

double RotationBase::golden_alpha() { return kPi * (std::sqrt(5.0) - 1.0); }

CocycleSpec::CocycleSpec(Kind kind, double c, std::vector<Mat2> bins)
    : kind_(kind), c_(c), bins_(std::move(bins)) {}

CocycleSpec CocycleSpec::herman_example(double c) {
  if (!std::isfinite(c) || c <= 0.0 || c == 1.0) {
    throw std::invalid_argument(
        "CocycleSpec: HermanExample needs c > 0 and c != 1");
  }
  return CocycleSpec(Kind::HermanExample, c, {});
}

CocycleSpec CocycleSpec::table_driven(std::vector<Mat2> bins) {
  if (bins.empty()) {
    throw std::invalid_argument("CocycleSpec: TableDriven needs >= 1 bin");
  }
  return CocycleSpec(Kind::TableDriven, 0.0, std::move(bins));
}

double CocycleSpec::c() const {
  if (kind_ != Kind::HermanExample) {
    throw std::logic_error("CocycleSpec: c() on a table-driven spec");
  }
  return c_;
}

const std::vector<Mat2>& CocycleSpec::bins() const {
  if (kind_ != Kind::TableDriven) {
    throw std::logic_error("CocycleSpec: bins() on a Herman spec");
  }
  return bins_;
}

Mat2 cocycle_step(const CocycleSpec& spec, double x) {
  if (spec.kind() == CocycleSpec::Kind::HermanExample) {
    return rotation(x) * Mat2::diagonal(spec.c());
  }
  const auto& bins = spec.bins();
  double w = std::fmod(x, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  auto idx = static_cast<std::size_t>(w / kTwoPi * static_cast<double>(bins.size()));
  if (idx >= bins.size()) idx = bins.size() - 1;
  return bins[idx];
}

namespace {

// Plain 2x2 accumulator: renormalized running products leave SL(2,R), so
// the unit-determinant type cannot hold them.
struct Raw2 {
  double a, b, c, d;
};

inline Raw2 mul(const Mat2& lhs, const Raw2& rhs) {
  return Raw2{lhs.a() * rhs.a + lhs.b() * rhs.c, lhs.a() * rhs.b + lhs.b() * rhs.d,
              lhs.c() * rhs.a + lhs.d() * rhs.c, lhs.c() * rhs.b + lhs.d() * rhs.d};
}

inline double raw_opnorm(const Raw2& m) {
  const double f = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
  const double det = m.a * m.d - m.b * m.c;
  double disc = f * f - 4.0 * det * det;
  if (disc < 0.0) disc = 0.0;
  return std::sqrt(0.5 * (f + std::sqrt(disc)));
}

double orbit_exponent(const RotationBase& base,
                      const std::function<Mat2(double)>& fiber,
                      std::int64_t iterations, int renorm_every) {
  if (iterations < 1000) {
    throw std::invalid_argument("lyapunov_estimate: iterations must be >= 1000");
  }
  if (renorm_every < 1) {
    throw std::invalid_argument("lyapunov_estimate: renorm_every must be >= 1");
  }
  double step = std::fmod(base.alpha(), kTwoPi);
  if (step < 0.0) step += kTwoPi;
  Raw2 prod{1.0, 0.0, 0.0, 1.0};
  double log_acc = 0.0;
  double x = base.x0();
  for (std::int64_t k = 0; k < iterations; ++k) {
    prod = mul(fiber(x), prod);
    if ((k + 1) % renorm_every == 0) {
      const double scale = raw_opnorm(prod);
      if (!std::isfinite(scale) || scale <= 0.0) {
        throw numerical_error(
            "lyapunov_estimate: orbit product overflowed at step " +
            std::to_string(k + 1));
      }
      log_acc += std::log(scale);
      prod.a /= scale;
      prod.b /= scale;
      prod.c /= scale;
      prod.d /= scale;
    }
    x += step;
    if (x >= kTwoPi) x -= kTwoPi;
  }
  const double tail = raw_opnorm(prod);
  if (!std::isfinite(tail) || tail <= 0.0) {
    throw numerical_error("lyapunov_estimate: orbit product overflowed");
  }
  return (log_acc + std::log(tail)) / static_cast<double>(iterations);
}

}  // namespace

double lyapunov_estimate(const RotationBase& base, const CocycleSpec& spec,
                         std::int64_t iterations, int renorm_every) {
  return orbit_exponent(
      base, [&spec](double x) { return cocycle_step(spec, x); }, iterations,
      renorm_every);
}

FamilyResult family_average(const RotationBase& base, const CocycleSpec& spec,
                            std::size_t theta_nodes, std::int64_t iterations) {
  if (theta_nodes < 16) {
    throw std::invalid_argument("family_average: theta_nodes must be >= 16");
  }
  FamilyResult result;
  result.per_theta.resize(theta_nodes);
  par::for_index(theta_nodes, [&](std::size_t i) {
    const double theta =
        kTwoPi * static_cast<double>(i) / static_cast<double>(theta_nodes);
    const Mat2 twist = rotation(theta);
    result.per_theta[i] = orbit_exponent(
        base, [&](double x) { return twist * cocycle_step(spec, x); },
        iterations, 16);
  });
  result.average =
      tree_sum(result.per_theta) / static_cast<double>(theta_nodes);
  return result;
}

double herman_integral(const RotationBase& base, const CocycleSpec& spec,
                       std::int64_t samples) {
  if (samples < 1000) {
    throw std::invalid_argument("herman_integral: samples must be >= 1000");
  }
  double step = std::fmod(base.alpha(), kTwoPi);
  if (step < 0.0) step += kTwoPi;
  double acc = 0.0;
  double x = base.x0();
  for (std::int64_t k = 0; k < samples; ++k) {
    acc += log_avg_norm(cocycle_step(spec, x));
    x += step;
    if (x >= kTwoPi) x -= kTwoPi;
  }
  return acc / static_cast<double>(samples);
}

}  // namespace cocycle
