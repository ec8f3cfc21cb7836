#include "gsp/cli/signals.hpp"

#include <algorithm>
#include <cmath>

#include "gsp/errors.hpp"

namespace gsp::cli {

Signal gaussian_signal(Index n, Index center, bool circular, std::optional<double> width) {
  if (n < 1 || center < 0 || center >= n) throw ParameterError("gaussian center out of range");
  const double w = width.value_or(static_cast<double>(n) / 10.0);
  if (!(w > 0.0)) throw ParameterError("gaussian width must be positive");
  Signal x(n);
  for (Index v = 0; v < n; ++v) {
    Index d = std::abs(v - center);
    if (circular) d = std::min(d, n - d);
    const double dd = static_cast<double>(d);
    x(v) = std::exp(-dd * dd / (2.0 * w * w));
  }
  return x;
}

Signal gaussian_signal_geometric(const RealMatrix& coordinates, Index center, double width) {
  const Index n = coordinates.rows();
  if (center < 0 || center >= n) throw ParameterError("gaussian center out of range");
  if (!(width > 0.0)) throw ParameterError("gaussian width must be positive");
  Signal x(n);
  for (Index v = 0; v < n; ++v) {
    const double d2 = (coordinates.row(v) - coordinates.row(center)).squaredNorm();
    x(v) = std::exp(-d2 / (2.0 * width * width));
  }
  return x;
}

Signal pulse_signal(Index n, Index vertex) {
  if (vertex < 0 || vertex >= n) throw ParameterError("pulse vertex out of range");
  Signal x = Signal::Zero(n);
  x(vertex) = 1.0;
  return x;
}

Signal sine_signal(Index n, double cycles) {
  Signal x(n);
  for (Index v = 0; v < n; ++v) {
    x(v) = std::sin(kTwoPi * cycles * static_cast<double>(v) / static_cast<double>(n));
  }
  return x;
}

}  // namespace gsp::cli
