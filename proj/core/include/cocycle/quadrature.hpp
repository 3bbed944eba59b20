#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace cocycle {

struct QuadResult {
  double value;
  double error_estimate;  // |value_N - value_{N/2}|, half rule on even nodes
  std::size_t nodes;
};

/// Deterministic pairwise reduction; the split order is fixed, so the sum is
/// bit-stable regardless of how the samples were produced.
double tree_sum(std::span<const double> xs);

/// Equal-weight trapezoid rule for periodic integrands:
///   sum f(start + i*h) * h,  h = length/nodes,  i = 0..nodes-1.
/// nodes must be even and >= 16 (the embedded error estimate reuses every
/// other sample). Samples may be evaluated concurrently; the reduction order
/// is fixed. A non-finite sample raises numerical_error naming the node.
QuadResult periodic_trapezoid(const std::function<double(double)>& f,
                              double period_start, double period_length,
                              std::size_t nodes);

}  // namespace cocycle
