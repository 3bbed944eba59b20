// Microbenchmarks for the hot paths of the cocycle core library.

#include <benchmark/benchmark.h>

#include <cocycle/lyapunov.hpp>
#include <cocycle/mat2.hpp>
#include <cocycle/projective.hpp>
#include <cocycle/quadrature.hpp>
#include <cocycle/sampling.hpp>
#include <cocycle/words.hpp>

namespace {

using namespace cocycle;

Mat2 bench_matrix() {
  SeededRng rng(11);
  return random_sl2(rng);
}

MatrixWord bench_word(std::size_t n) {
  SeededRng rng(12 + n);
  return random_word(rng, n);
}

void BM_Svd2(benchmark::State& state) {
  const Mat2 a = bench_matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(svd2(a));
  }
}
BENCHMARK(BM_Svd2);

void BM_Involution(benchmark::State& state) {
  const Mat2 a = bench_matrix();
  double p = 0.3;
  for (auto _ : state) {
    const ProjPoint image = involution(a, ProjPoint(p));
    benchmark::DoNotOptimize(image);
    p = -p;
  }
}
BENCHMARK(BM_Involution);

void BM_LiftJet(benchmark::State& state) {
  const MatrixWord w = bench_word(static_cast<std::size_t>(state.range(0)));
  const WordAction act(w);
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(act.lift_jet(theta, 0.4));
    theta += 1e-6;
  }
}
BENCHMARK(BM_LiftJet)->Arg(2)->Arg(5);

void BM_BranchSolve(benchmark::State& state) {
  const MatrixWord w = bench_word(static_cast<std::size_t>(state.range(0)));
  const WordAction act(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(branch_solve(act, ProjPoint(0.7)));
  }
}
BENCHMARK(BM_BranchSolve)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_AvgSpectralRadius(benchmark::State& state) {
  const MatrixWord w = bench_word(3);
  const std::size_t nodes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(avg_spectral_radius(w, nodes));
  }
}
BENCHMARK(BM_AvgSpectralRadius)->Arg(1024)->Arg(16384);

void BM_JAll(benchmark::State& state) {
  const MatrixWord w = bench_word(3);
  const std::size_t nodes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(j_all(w, nodes));
  }
}
BENCHMARK(BM_JAll)->Arg(512)->Arg(2048);

void BM_LyapunovEstimate(benchmark::State& state) {
  const RotationBase base(RotationBase::golden_alpha());
  const CocycleSpec spec = CocycleSpec::herman_example(2.0);
  const std::int64_t iterations = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lyapunov_estimate(base, spec, iterations));
  }
}
BENCHMARK(BM_LyapunovEstimate)->Arg(10000)->Arg(100000);

void BM_PeriodicTrapezoid(benchmark::State& state) {
  const std::size_t nodes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(periodic_trapezoid(
        [](double t) { return std::exp(std::cos(t)); }, 0.0, 2.0 * kPi,
        nodes));
  }
}
BENCHMARK(BM_PeriodicTrapezoid)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
