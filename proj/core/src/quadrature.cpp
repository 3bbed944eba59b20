#include "cocycle/quadrature.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cocycle/mat2.hpp"
#include "cocycle/parallel.hpp"

namespace cocycle {

double tree_sum(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n <= 8) {
    double s = 0.0;
    for (const double x : xs) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return tree_sum(xs.first(half)) + tree_sum(xs.subspan(half));
}

QuadResult periodic_trapezoid(const std::function<double(double)>& f,
                              double period_start, double period_length,
                              std::size_t nodes) {
  if (!std::isfinite(period_start) || !std::isfinite(period_length) ||
      period_length <= 0.0) {
    throw std::invalid_argument("periodic_trapezoid: bad period");
  }
  if (nodes < 16 || nodes % 2 != 0) {
    throw std::invalid_argument(
        "periodic_trapezoid: nodes must be even and >= 16");
  }

  const double h = period_length / static_cast<double>(nodes);
  std::vector<double> samples(nodes);
  par::for_index(nodes, [&](std::size_t i) {
    samples[i] = f(period_start + static_cast<double>(i) * h);
  });

  for (std::size_t i = 0; i < nodes; ++i) {
    if (!std::isfinite(samples[i])) {
      throw numerical_error(
          "periodic_trapezoid: non-finite sample at node " + std::to_string(i) +
          " (t = " + std::to_string(period_start + static_cast<double>(i) * h) +
          ")");
    }
  }

  const double full = tree_sum(samples) * h;

  std::vector<double> coarse(nodes / 2);
  for (std::size_t i = 0; i < coarse.size(); ++i) coarse[i] = samples[2 * i];
  const double half_rule = tree_sum(coarse) * (2.0 * h);

  return QuadResult{full, std::abs(full - half_rule), nodes};
}

}  // namespace cocycle
