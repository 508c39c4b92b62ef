#pragma once

#include <cstdint>
#include <random>

#include "ggf/types.hpp"

namespace ggf {

/// Deterministic random source for probes and test fixtures. All randomness
/// in the library flows through this class so that a recorded seed reproduces
/// an experiment bit for bit. The Gaussian sampler is hand-rolled Box-Muller
/// on top of mt19937_64, independent of any library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal.
  double gaussian();

  /// Complex with independent standard normal real and imaginary parts.
  cplx complex_gaussian() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
  }

  /// Length-L signal with complex Gaussian entries.
  Vec signal(int L);

  /// Sum of `rank` random rank-one operators xi (x) phi.
  Mat op(int L, int rank);

  std::uint64_t integer() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ggf
