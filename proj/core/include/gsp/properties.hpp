#pragma once

#include <cstdint>
#include <optional>

#include "gsp/filters.hpp"

namespace gsp {

/// A boolean verdict together with the number that decided it.
struct Verdict {
  bool holds = false;
  double witness = 0.0;
};

/// Outcome of the property battery for one filter. Each verdict carries its
/// witness so callers can re-judge under a different tolerance.
struct PropertyReport {
  double tol = kDefaultTol;

  /// witness: minimum pairwise distance between response components.
  Verdict atomic;
  /// witness: max ||a_k| - 1|.
  Verdict norm_preserving;
  /// Sampled only: witness is the max of |sigma(Hx) - sigma(x)| / max(1, sigma(x))
  /// over `smoothness_trials` seeded random signals.
  Verdict smoothness_preserving_sampled;
  int smoothness_trials = 0;
  /// Phase criterion: witness is the distance of the sorted phases (and the
  /// moduli) from the grid {2 pi k / N}.
  Verdict periodic;
  /// |H^N - I|_max from repeated squaring of the dense operator.
  double periodic_matrix_residual = 0.0;
  /// witness: max |Im H_{mn}|.
  Verdict real_preserving;
  /// Conjugate-pairing condition on (a, U); present only when a pairing of
  /// the basis columns was detected. witness: max of |Im a_1| and
  /// |a_k - conj(a_{p(k)})|.
  std::optional<Verdict> structural_real;
  /// witness: max over entries of min(|h|, ||h| - 1|).
  Verdict permutation;
  /// atomic && norm_preserving && real_preserving.
  bool normal = false;
};

struct PropertyOptions {
  int trials = 16;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
};

/// Phase-grid periodicity test on a response alone.
Verdict periodic_phase_criterion(const FrequencyResponse& a, double tol = kDefaultTol);

/// max over k of |a_k - conj(a_{p(k)})| (with k = 0 giving |Im a_0|).
double pairing_violation(const FrequencyResponse& a, const Pairing& pairing);

/// |H^power - I|_max.
double power_identity_residual(const ComplexMatrix& h, unsigned power);

PropertyReport check_properties(const Filter& f, const RealMatrix& laplacian,
                                const PropertyOptions& options = {});

}  // namespace gsp
