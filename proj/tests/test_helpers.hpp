#pragma once

#include <cmath>

#include "cocycle/mat2.hpp"
#include "cocycle/projective.hpp"
#include "cocycle/sampling.hpp"

namespace cocycle::testing {

// Random unit-determinant matrix bounded away from the orthogonal group,
// where the involution is undefined and nearby identities lose conditioning.
inline Mat2 random_nonorthogonal(SeededRng& rng, double margin = 1e-6) {
  for (;;) {
    const Mat2 m = random_sl2(rng);
    if (operator_norm(m) > 1.0 + margin) return m;
  }
}

// Central difference of a circle-valued map t -> ProjPoint, respecting the
// wrap at pi.
template <typename F>
double circle_central_diff(F&& f, double t, double step) {
  const double hi = f(t + step).angle();
  const double lo = f(t - step).angle();
  return symmetric_mod_pi(hi - lo) / (2.0 * step);
}

// Central difference of a real-valued map.
template <typename F>
double central_diff(F&& f, double t, double step) {
  return (f(t + step) - f(t - step)) / (2.0 * step);
}

}  // namespace cocycle::testing
