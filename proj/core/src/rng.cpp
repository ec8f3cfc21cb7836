#include "gsp/rng.hpp"

#include <cmath>

namespace gsp {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  has_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

std::uint64_t Rng::below(std::uint64_t n) {
  // rejection keeps the draw unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

RealVector Rng::real_normal(Index n) {
  RealVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = normal();
  return v;
}

ComplexVector Rng::complex_normal(Index n) {
  ComplexVector v(n);
  for (Index i = 0; i < n; ++i) {
    const double re = normal();
    const double im = normal();
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace gsp
