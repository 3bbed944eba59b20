#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "cocycle/lyapunov.hpp"
#include "cocycle/mat2.hpp"
#include "cocycle/sampling.hpp"

using namespace cocycle;

namespace {
const double kLog125 = 0.22314355131420976;  // log 1.25
}

TEST_SUITE("lyapunov") {

TEST_CASE("golden rotation number") {
  CHECK(RotationBase::golden_alpha() ==
        doctest::Approx(3.8832220774509332).epsilon(1e-15));
  const RotationBase base(RotationBase::golden_alpha());
  CHECK_FALSE(base.diophantine().suspicious);
}

TEST_CASE("near-rational rotation numbers are flagged") {
  // alpha/2pi = 1/2 exactly.
  const RotationBase half(kPi);
  CHECK(half.diophantine().suspicious);
  CHECK(half.diophantine().denominator == 2);
  // A high-quality rational approximation is still caught.
  const RotationBase close(2.0 * kPi * (1.0 / 3.0 + 1e-9));
  CHECK(close.diophantine().suspicious);
  CHECK(close.diophantine().denominator == 3);
  CHECK_THROWS_AS(RotationBase(std::nan("")), std::invalid_argument);
}

TEST_CASE("cocycle spec validation") {
  CHECK_THROWS_AS(CocycleSpec::herman_example(1.0), std::invalid_argument);
  CHECK_THROWS_AS(CocycleSpec::herman_example(-2.0), std::invalid_argument);
  CHECK_THROWS_AS(CocycleSpec::herman_example(0.0), std::invalid_argument);
  CHECK_THROWS_AS(CocycleSpec::table_driven({}), std::invalid_argument);

  const CocycleSpec herman = CocycleSpec::herman_example(2.0);
  CHECK(herman.kind() == CocycleSpec::Kind::HermanExample);
  CHECK(herman.c() == 2.0);
  CHECK_THROWS_AS(herman.bins(), std::logic_error);

  const CocycleSpec table = CocycleSpec::table_driven({Mat2::identity()});
  CHECK(table.bins().size() == 1);
  CHECK_THROWS_AS(table.c(), std::logic_error);
}

TEST_CASE("cocycle_step evaluation") {
  const CocycleSpec herman = CocycleSpec::herman_example(2.0);
  CHECK(max_abs_diff(cocycle_step(herman, 0.7),
                     rotation(0.7) * Mat2::diagonal(2.0)) < 1e-15);

  SeededRng rng(2);
  const CocycleSpec table = CocycleSpec::table_driven(random_table(rng, 4));
  // x in [0, 2pi) maps to bins of equal width.
  CHECK(max_abs_diff(cocycle_step(table, 0.0), table.bins()[0]) == 0.0);
  CHECK(max_abs_diff(cocycle_step(table, kPi), table.bins()[2]) == 0.0);
  CHECK(max_abs_diff(cocycle_step(table, 2.0 * kPi - 1e-9),
                     table.bins()[3]) == 0.0);
  // Arguments wrap.
  CHECK(max_abs_diff(cocycle_step(table, -kPi), table.bins()[2]) == 0.0);
  CHECK(max_abs_diff(cocycle_step(table, 4.0 * kPi + 0.1),
                     cocycle_step(table, 0.1)) == 0.0);
}

TEST_CASE("worked example exponent") {
  const RotationBase base(RotationBase::golden_alpha());
  const CocycleSpec spec = CocycleSpec::herman_example(2.0);
  const double le = lyapunov_estimate(base, spec, 100000);
  CHECK(std::abs(le - kLog125) < 5e-3);
  CHECK(le >= 0.0);
  CHECK_THROWS_AS(lyapunov_estimate(base, spec, 10), std::invalid_argument);
  CHECK_THROWS_AS(lyapunov_estimate(base, spec, 100000, 0),
                  std::invalid_argument);
}

TEST_CASE("identity cocycle has zero exponent") {
  const RotationBase base(RotationBase::golden_alpha());
  const CocycleSpec spec = CocycleSpec::table_driven({Mat2::identity()});
  CHECK(lyapunov_estimate(base, spec, 10000) == 0.0);
}

TEST_CASE("constant hyperbolic cocycle") {
  // Constant diag(2, 1/2): the orbit product is diag(2^n, 2^-n).
  const RotationBase base(RotationBase::golden_alpha());
  const CocycleSpec spec = CocycleSpec::table_driven({Mat2::diagonal(2.0)});
  const double le = lyapunov_estimate(base, spec, 100000);
  CHECK(std::abs(le - spectral_radius_log(Mat2::diagonal(2.0))) < 1e-6);
}

TEST_CASE("renormalization cadence does not change the estimate") {
  const RotationBase base(RotationBase::golden_alpha());
  const CocycleSpec spec = CocycleSpec::herman_example(2.0);
  const double a = lyapunov_estimate(base, spec, 50000, 1);
  const double b = lyapunov_estimate(base, spec, 50000, 8);
  const double c = lyapunov_estimate(base, spec, 50000, 64);
  CHECK(std::abs(a - b) < 2e-3);
  CHECK(std::abs(b - c) < 2e-3);
}

TEST_CASE("renormalization survives strong growth") {
  const RotationBase base(RotationBase::golden_alpha());
  const CocycleSpec spec = CocycleSpec::herman_example(1000.0);
  const double le = lyapunov_estimate(base, spec, 10000);
  // log((1000 + 1/1000)/2)
  CHECK(std::abs(le - 6.2146090984216917) < 0.05);
}

TEST_CASE("determinism of the estimate") {
  const RotationBase base(RotationBase::golden_alpha(), 0.25);
  SeededRng rng(4);
  const CocycleSpec spec = CocycleSpec::table_driven(random_table(rng, 8));
  const double a = lyapunov_estimate(base, spec, 20000);
  const double b = lyapunov_estimate(base, spec, 20000);
  CHECK(a == b);
}

TEST_CASE("family average of the worked example is flat") {
  // Twisting the example by R_theta only shifts the base point, so the
  // per-theta estimates agree and the average matches the single estimate.
  const RotationBase base(RotationBase::golden_alpha());
  const CocycleSpec spec = CocycleSpec::herman_example(2.0);
  const FamilyResult fam = family_average(base, spec, 16, 50000);
  REQUIRE(fam.per_theta.size() == 16);
  double lo = fam.per_theta[0], hi = fam.per_theta[0];
  for (double v : fam.per_theta) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi - lo < 2e-2);
  CHECK(std::abs(fam.average - kLog125) < 5e-3);
  CHECK_THROWS_AS(family_average(base, spec, 8, 50000),
                  std::invalid_argument);
}

TEST_CASE("family average is independent of the worker count") {
  const RotationBase base(RotationBase::golden_alpha());
  SeededRng rng(6);
  const CocycleSpec spec = CocycleSpec::table_driven(random_table(rng, 8));
  setenv("COCYCLE_LAB_THREADS", "1", 1);
  const FamilyResult serial = family_average(base, spec, 32, 5000);
  setenv("COCYCLE_LAB_THREADS", "4", 1);
  const FamilyResult parallel = family_average(base, spec, 32, 5000);
  unsetenv("COCYCLE_LAB_THREADS");
  CHECK(serial.average == parallel.average);
  for (std::size_t i = 0; i < serial.per_theta.size(); ++i) {
    CHECK(serial.per_theta[i] == parallel.per_theta[i]);
  }
}

TEST_CASE("base integral of the worked example") {
  // The integrand is x-independent, so the Birkhoff average is exact.
  const RotationBase base(RotationBase::golden_alpha());
  const CocycleSpec spec = CocycleSpec::herman_example(2.0);
  CHECK(herman_integral(base, spec, 1000) ==
        doctest::Approx(kLog125).epsilon(1e-12));
  CHECK_THROWS_AS(herman_integral(base, spec, 10), std::invalid_argument);
}

TEST_CASE("base integral matches the exact bin average") {
  const RotationBase base(RotationBase::golden_alpha());
  SeededRng rng(9);
  const CocycleSpec spec = CocycleSpec::table_driven(random_table(rng, 8));
  double exact = 0.0;
  for (const Mat2& m : spec.bins()) exact += log_avg_norm(m);
  exact /= static_cast<double>(spec.bins().size());
  CHECK(std::abs(herman_integral(base, spec, 1000000) - exact) < 1e-3);
}

TEST_CASE("family average tracks the base integral") {
  const RotationBase base(RotationBase::golden_alpha(), 0.3);
  SeededRng rng(11);
  const CocycleSpec spec = CocycleSpec::table_driven(random_table(rng, 8));
  const FamilyResult fam = family_average(base, spec, 32, 20000);
  const double integral = herman_integral(base, spec, 100000);
  CHECK(std::abs(fam.average - integral) < 5e-2);
  // Herman's lower bound, up to the same statistical tolerance.
  CHECK(fam.average >= integral - 5e-2);
  for (double v : fam.per_theta) CHECK(v >= 0.0);
}

}  // TEST_SUITE
