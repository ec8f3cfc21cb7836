#pragma once

#include <cstdint>
#include <random>

#include "gsp/types.hpp"

namespace gsp {

// Seeded generator whose output is identical across standard libraries.
// std::uniform_real_distribution and friends are implementation-defined, so
// conversion from raw 64-bit words is done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform on {0, ..., n-1}.
  std::uint64_t below(std::uint64_t n);

  RealVector real_normal(Index n);
  ComplexVector complex_normal(Index n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gsp
