#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "cocycle/mat2.hpp"
#include "cocycle/quadrature.hpp"
#include "cocycle/sampling.hpp"

using namespace cocycle;

TEST_SUITE("quadrature") {

TEST_CASE("tree_sum basics") {
  CHECK(tree_sum({}) == 0.0);
  const std::vector<double> one{3.5};
  CHECK(tree_sum(one) == 3.5);
  std::vector<double> xs(1000);
  SeededRng rng(3);
  for (double& x : xs) x = rng.uniform(-1.0, 1.0);
  const double direct = std::accumulate(xs.begin(), xs.end(), 0.0);
  CHECK(tree_sum(xs) == doctest::Approx(direct).epsilon(1e-12));
  // Deterministic: same data, same result, bit for bit.
  CHECK(tree_sum(xs) == tree_sum(xs));
}

TEST_CASE("tree_sum beats sequential rounding") {
  // Summing N copies of x recovers N*x almost exactly.
  std::vector<double> xs(1 << 16, 0.1);
  const double exact = 0.1 * static_cast<double>(xs.size());
  CHECK(std::abs(tree_sum(xs) - exact) < 1e-9);
}

TEST_CASE("periodic_trapezoid on exact trigonometric integrals") {
  // Mean of cos^2 over a period is 1/2; the rule is exact for low modes.
  const auto r = periodic_trapezoid(
      [](double t) { return std::cos(t) * std::cos(t); }, 0.0, 2.0 * kPi, 32);
  CHECK(r.value / (2.0 * kPi) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(r.nodes == 32);
}

TEST_CASE("periodic_trapezoid converges spectrally on analytic integrands") {
  // Integral of exp(sin t) over a period is 2 pi I0(1).
  const double exact = 2.0 * kPi * 1.2660658777520084;
  const auto r = periodic_trapezoid([](double t) { return std::exp(std::sin(t)); },
                                    0.0, 2.0 * kPi, 64);
  CHECK(std::abs(r.value - exact) < 1e-13);
  CHECK(r.error_estimate < 1e-10);
}

TEST_CASE("error estimate tracks the half-rule difference") {
  // For a slowly converging integrand the estimate must be nonzero and
  // bound the observed refinement step.
  const auto coarse = periodic_trapezoid(
      [](double t) { return std::abs(std::sin(t)); }, 0.0, 2.0 * kPi, 64);
  const auto fine = periodic_trapezoid(
      [](double t) { return std::abs(std::sin(t)); }, 0.0, 2.0 * kPi, 128);
  CHECK(coarse.error_estimate > 0.0);
  CHECK(std::abs(fine.value - coarse.value) <= 2.0 * coarse.error_estimate);
}

TEST_CASE("argument validation") {
  const auto f = [](double) { return 1.0; };
  CHECK_THROWS_AS(periodic_trapezoid(f, 0.0, kPi, 8), std::invalid_argument);
  CHECK_THROWS_AS(periodic_trapezoid(f, 0.0, kPi, 17), std::invalid_argument);
  CHECK_THROWS_AS(periodic_trapezoid(f, 0.0, 0.0, 32), std::invalid_argument);
  CHECK_THROWS_AS(periodic_trapezoid(f, 0.0, -1.0, 32), std::invalid_argument);
}

TEST_CASE("non-finite samples are reported") {
  CHECK_THROWS_AS(periodic_trapezoid(
                      [](double t) { return t < 1.0 ? 1.0 : std::nan(""); },
                      0.0, 2.0 * kPi, 32),
                  numerical_error);
}

TEST_CASE("constant integrand is exact") {
  const auto r = periodic_trapezoid([](double) { return 2.5; }, -1.0, kPi, 16);
  CHECK(r.value == doctest::Approx(2.5 * kPi).epsilon(1e-15));
  CHECK(r.error_estimate == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

}  // TEST_SUITE
