#include "cocycle/sampling.hpp"

#include <cmath>

namespace cocycle {
namespace {

constexpr double kMinAbsDet = 0.05;
constexpr double kMaxCond2 = 1.0e3;

}  // namespace

Mat2 random_sl2(SeededRng& rng) {
  for (;;) {
    const double a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    const double c = rng.uniform(-2.0, 2.0);
    const double d = rng.uniform(-2.0, 2.0);
    const double det = a * d - b * c;
    if (std::abs(det) < kMinAbsDet) continue;
    // Rescale the second column so the determinant is exactly one (up to
    // rounding); a negative det flips orientation into the unit-det class.
    const Mat2 m(a, b / det, c, d / det);
    const double f2 = m.fnorm2();
    // Unit determinant makes the condition number sigma/sigma^{-1} =
    // sigma^2, where sigma^2 solves t^2 - f2 t + 1 = 0.
    const double disc = f2 * f2 - 4.0;
    const double cond =
        0.5 * (f2 + std::sqrt(disc > 0.0 ? disc : 0.0));
    if (cond > kMaxCond2) continue;
    return m;
  }
}

MatrixWord random_word(SeededRng& rng, std::size_t length) {
  std::vector<Mat2> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) letters.push_back(random_sl2(rng));
  return MatrixWord(std::move(letters));
}

ProjPoint random_proj_point(SeededRng& rng) {
  return ProjPoint(rng.uniform(0.0, kPi));
}

std::vector<Mat2> random_table(SeededRng& rng, std::size_t bins) {
  std::vector<Mat2> table;
  table.reserve(bins);
  for (std::size_t i = 0; i < bins; ++i) table.push_back(random_sl2(rng));
  return table;
}

}  // namespace cocycle
