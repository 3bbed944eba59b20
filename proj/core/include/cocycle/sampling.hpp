#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cocycle/mat2.hpp"
#include "cocycle/projective.hpp"
#include "cocycle/words.hpp"

namespace cocycle {

// Deterministic seeded random source.  Draws use only the engine's raw
// 64-bit output with an explicit integer-to-double mapping, so streams are
// reproducible across platforms for a fixed seed (std::mt19937_64 output is
// specified exactly; the std::uniform_* distributions are not).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

 private:
  std::mt19937_64 engine_;
};

// Draws a random unit-determinant matrix by rejection: entries uniform in
// [-2, 2], retry while |det| < 0.05, rescale the second column by 1/det to
// land exactly on determinant one, retry while the squared condition number
// exceeds 10^3.  The resulting distribution mixes elliptic, near-parabolic
// and hyperbolic elements with moderate norms.
Mat2 random_sl2(SeededRng& rng);

// A word of `length` independent random_sl2 letters.
MatrixWord random_word(SeededRng& rng, std::size_t length);

// Uniform point on the projective circle [0, pi).
ProjPoint random_proj_point(SeededRng& rng);

// A table of `bins` independent random_sl2 matrices, suitable for
// CocycleSpec::table_driven.
std::vector<Mat2> random_table(SeededRng& rng, std::size_t bins);

}  // namespace cocycle
