#include "gsp/properties.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gsp/errors.hpp"
#include "gsp/rng.hpp"

namespace gsp {

Verdict periodic_phase_criterion(const FrequencyResponse& a, double tol) {
  const Index n = a.size();
  const double step = kTwoPi / static_cast<double>(n);
  double worst = 0.0;
  std::vector<double> phases(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) {
    worst = std::max(worst, std::abs(std::abs(a(k)) - 1.0));
    double theta = std::fmod(-std::arg(a(k)) + kTwoPi, kTwoPi);
    // phases just below 2 pi sit next to the grid point 0
    if (theta > kTwoPi - 0.5 * step) theta -= kTwoPi;
    phases[static_cast<std::size_t>(k)] = theta;
  }
  std::sort(phases.begin(), phases.end());
  for (Index k = 0; k < n; ++k) {
    worst = std::max(worst, std::abs(phases[static_cast<std::size_t>(k)] -
                                     step * static_cast<double>(k)));
  }
  return {worst <= tol, worst};
}

double pairing_violation(const FrequencyResponse& a, const Pairing& pairing) {
  double worst = std::abs(a(0).imag());
  for (Index k = 1; k < a.size(); ++k) {
    const Index p = pairing.partner[static_cast<std::size_t>(k)];
    worst = std::max(worst, std::abs(a(k) - std::conj(a(p))));
  }
  return worst;
}

double power_identity_residual(const ComplexMatrix& h, unsigned power) {
  const Index n = h.rows();
  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix base = h;
  while (power > 0) {
    if (power & 1u) result = result * base;
    power >>= 1u;
    if (power > 0) base = base * base;
  }
  return max_abs(result - ComplexMatrix::Identity(n, n));
}

namespace {

Verdict permutation_verdict(const ComplexMatrix& h, double tol) {
  const Index n = h.rows();
  double worst = 0.0;
  std::vector<int> row_units(static_cast<std::size_t>(n), 0);
  std::vector<int> col_units(static_cast<std::size_t>(n), 0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double m = std::abs(h(i, j));
      const double to_one = std::abs(m - 1.0);
      worst = std::max(worst, std::min(m, to_one));
      if (to_one <= tol) {
        ++row_units[static_cast<std::size_t>(i)];
        ++col_units[static_cast<std::size_t>(j)];
      }
    }
  }
  bool ok = worst <= tol;
  for (Index i = 0; i < n && ok; ++i) {
    ok = row_units[static_cast<std::size_t>(i)] == 1 && col_units[static_cast<std::size_t>(i)] == 1;
  }
  return {ok, worst};
}

Verdict sampled_smoothness(const Filter& f, const RealMatrix& laplacian,
                           const PropertyOptions& options) {
  Rng rng(options.seed);
  double worst = 0.0;
  for (int t = 0; t < options.trials; ++t) {
    const Signal x = rng.complex_normal(f.size());
    const Signal hx = f.matrix() * x;
    const double before = smoothness(laplacian, x);
    const double after = smoothness(laplacian, hx);
    worst = std::max(worst, std::abs(after - before) / std::max(1.0, before));
  }
  return {worst <= options.tol, worst};
}

}  // namespace

PropertyReport check_properties(const Filter& f, const RealMatrix& laplacian,
                                const PropertyOptions& options) {
  const Index n = f.size();
  if (laplacian.rows() != n || laplacian.cols() != n) {
    throw ParameterError("Laplacian size does not match the filter");
  }
  if (options.trials < 0) throw ParameterError("trials must be nonnegative");
  const double tol = options.tol;
  const FrequencyResponse& a = f.response();
  const ComplexMatrix& h = f.matrix();

  PropertyReport r;
  r.tol = tol;

  const auto atomicity = is_atomic(a, tol);
  r.atomic = {atomicity.atomic, atomicity.min_gap};

  const double modulus_dev = (a.cwiseAbs().array() - 1.0).abs().maxCoeff();
  r.norm_preserving = {modulus_dev <= tol, modulus_dev};

  r.smoothness_trials = options.trials;
  r.smoothness_preserving_sampled = sampled_smoothness(f, laplacian, options);

  r.periodic = periodic_phase_criterion(a, tol);
  r.periodic_matrix_residual = power_identity_residual(h, static_cast<unsigned>(n));

  const double imag = max_abs(h.imag());
  r.real_preserving = {imag <= tol, imag};

  if (const auto pairing = detect_conjugate_pairing(f.basis())) {
    const double violation = pairing_violation(a, *pairing);
    r.structural_real = Verdict{violation <= tol, violation};
  }

  r.permutation = permutation_verdict(h, tol);
  r.normal = r.atomic.holds && r.norm_preserving.holds && r.real_preserving.holds;
  return r;
}

}  // namespace gsp
