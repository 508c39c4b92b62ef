#include <benchmark/benchmark.h>

#include "ggf/generators.hpp"
#include "ggf/gframe.hpp"
#include "ggf/rng.hpp"
#include "ggf/spreading.hpp"
#include "ggf/tfcore.hpp"

using namespace ggf;

namespace {

Mat fixture_op(int L) { return random_op(L, std::min(L, 4), 7); }

void BM_stft(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  Rng rng(3);
  Vec psi = rng.signal(L), phi = rng.signal(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stft(psi, phi));
  }
}
BENCHMARK(BM_stft)->Arg(16)->Arg(64)->Arg(128);

void BM_spreading(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  Mat s = fixture_op(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spreading_of(s));
  }
}
BENCHMARK(BM_spreading)->Arg(16)->Arg(64)->Arg(128);

// Periodization touches card(lattice) terms, the Janssen series touches
// card(adjoint) = L^2/card terms; dense lattices flip the balance.
void BM_periodize_dense(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  Lattice lat = Lattice::separable(L, 2, 2);
  Mat s = fixture_op(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(periodize(s, lat));
  }
}
BENCHMARK(BM_periodize_dense)->Arg(16)->Arg(32)->Arg(64);

void BM_janssen_dense(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  Lattice lat = Lattice::separable(L, 2, 2);
  Mat s = fixture_op(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(janssen_rep(s, lat));
  }
}
BENCHMARK(BM_janssen_dense)->Arg(16)->Arg(32)->Arg(64);

void BM_frame_bounds(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  Lattice lat = Lattice::separable(L, 2, 2);
  Mat s = fixture_op(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frame_bounds(s, lat));
  }
}
BENCHMARK(BM_frame_bounds)->Arg(12)->Arg(24)->Arg(48);

void BM_canonical_dual(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  Lattice lat = Lattice::separable(L, 2, 2);
  Mat s = fixture_op(L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_dual(s, lat));
  }
}
BENCHMARK(BM_canonical_dual)->Arg(12)->Arg(24)->Arg(48);

}  // namespace

BENCHMARK_MAIN();
