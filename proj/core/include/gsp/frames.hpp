#pragma once

#include <optional>
#include <vector>

#include "gsp/spectral.hpp"
#include "gsp/types.hpp"

namespace gsp {

struct FrameOptions {
  /// Rescale the window to unit 2-norm before building atoms.
  bool normalize_window = true;
  /// Max |A A* - I| accepted for the response matrix rows.
  double orthonormality_tol = 1e-9;
  /// C_n at or below this is treated as zero.
  double degenerate_threshold = 1e-12;
};

/// Windowed Fourier atoms g_{j,k} = (H_{a_j} g) .* u_k with per-vertex
/// reconstruction weights C_n = sum_l |g_hat(l)|^2 |u_l(n)|^2.
///
/// Atoms are stored column-wise in the order (j, k) -> j * N + k, and
/// coefficient matrices are J x N with row j, column k.
class FrameDictionary {
 public:
  const FourierBasis& basis() const noexcept { return *basis_; }
  const Signal& window() const noexcept { return window_; }
  const Signal& window_hat() const noexcept { return window_hat_; }
  const ComplexMatrix& responses() const noexcept { return responses_; }
  const ComplexMatrix& atoms() const noexcept { return atoms_; }
  const RealVector& weights() const noexcept { return weights_; }
  /// min_n C_n.
  double lower_bound() const noexcept { return alpha_; }
  /// max_n C_n.
  double upper_bound() const noexcept { return beta_; }
  /// max |A A* - I| measured at construction.
  double gram_residual() const noexcept { return gram_residual_; }
  bool window_normalized() const noexcept { return normalized_; }

  Index size() const noexcept { return window_.size(); }
  Index response_count() const noexcept { return responses_.cols(); }

  auto atom(Index j, Index k) const { return atoms_.col(j * size() + k); }

 private:
  friend FrameDictionary build_frame(BasisPtr, const Signal&, const ComplexMatrix&,
                                     const FrameOptions&);
  FrameDictionary() = default;

  BasisPtr basis_;
  Signal window_;
  Signal window_hat_;
  ComplexMatrix responses_;
  ComplexMatrix atoms_;
  RealVector weights_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double gram_residual_ = 0.0;
  bool normalized_ = false;
};

/// Throws FrameCondition when the rows of A are not orthonormal (or J < N)
/// and DegenerateWindow when some C_n vanishes.
FrameDictionary build_frame(BasisPtr basis, const Signal& window,
                            const ComplexMatrix& responses,
                            const FrameOptions& options = {});

/// Column j is (a_1^j, ..., a_N^j)^T / sqrt(N), j = 0..N-1.
ComplexMatrix power_responses(const FrequencyResponse& a);

/// A = P U C with P a row permutation, U the DFT matrix and
/// C = diag(1, c, ..., c^{N-1}).
struct UnitaryDecomposition {
  /// Row i of A equals row permutation[i] of U C (0-based).
  std::vector<Index> permutation;
  Complex c;
  /// max |P U C - A|.
  double reproduction_error;
};

/// Succeeds iff power_responses(a) is unitary: all |a_k| = 1 and the sorted
/// phases are equally spaced by 2 pi / N.
std::optional<UnitaryDecomposition> lemma_unitary_decompose(const FrequencyResponse& a,
                                                            double tol = 1e-9);

/// Coefficients <f, g_{j,k}> = g_{j,k}* f as a J x N matrix.
ComplexMatrix analyze(const FrameDictionary& d, const Signal& f);

/// f(n) = (1 / C_n) sum_{j,k} coeff(j,k) g_{j,k}(n).
Signal synthesize(const FrameDictionary& d, const ComplexMatrix& coefficients);

}  // namespace gsp
