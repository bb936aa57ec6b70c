#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace semibounded {

/// Seeded source for every randomized check. Engine: std::mt19937_64.
///   uniform01 = (next() >> 11) * 2^-53
///   normal    = Box-Muller on two uniforms, second draw discarded
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  double normal();
  std::complex<double> complex_normal() { return {normal(), normal()}; }

  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace semibounded
