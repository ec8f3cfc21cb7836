#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gsp/types.hpp"

namespace gsp {

/// Ascending Laplacian eigenvalues with real orthonormal eigenvectors.
/// Column k of `vectors` belongs to eigenvalues(k); column 0 is 1/sqrt(N).
struct RealSpectrum {
  RealVector eigenvalues;
  RealMatrix vectors;

  Index size() const noexcept { return eigenvalues.size(); }
  double largest() const { return eigenvalues(size() - 1); }
};

/// Conjugate pairing of basis columns: u_k = c_k * conj(u_{p(k)}).
/// Indices are 0-based; entry 0 is the constant column and maps to itself
/// with c = 1.
struct Pairing {
  std::vector<Index> partner;
  ComplexVector scale;

  bool is_involution() const;
};

/// Unitary graph Fourier basis, columns u_k.
class FourierBasis {
 public:
  FourierBasis(ComplexMatrix u, RealVector eigenvalues,
               std::optional<Pairing> pairing = std::nullopt);

  Index size() const noexcept { return u_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return u_; }
  auto column(Index k) const { return u_.col(k); }

  /// Eigenvalue for each column; empty when the basis was built without a
  /// Laplacian (see attach_eigenvalues).
  const RealVector& eigenvalues() const noexcept { return eigenvalues_; }
  bool has_eigenvalues() const noexcept { return eigenvalues_.size() == size(); }

  const std::optional<Pairing>& pairing() const noexcept { return pairing_; }

  /// max |U*U - I|.
  double unitarity_residual() const;

 private:
  ComplexMatrix u_;
  RealVector eigenvalues_;
  std::optional<Pairing> pairing_;
};

using BasisPtr = std::shared_ptr<const FourierBasis>;

/// Contiguous run of ascending eigenvalues closer than the tolerance.
struct MultiplicityGroup {
  double eigenvalue;           // first member of the run
  std::vector<Index> columns;  // 0-based
};

struct MultiplicityGroups {
  std::vector<MultiplicityGroup> groups;
  double tol;

  std::vector<std::size_t> sizes() const;
};

/// Result of the odd-multiplicity test for normal atomic filters.
struct NormalSupport {
  bool supported;
  /// Nonzero eigenvalues with odd multiplicity.
  std::vector<double> odd_eigenvalues;
};

/// 1e-8 * max(1, lambda_max).
double default_multiplicity_tol(const RealVector& eigenvalues);

/// Symmetric eigendecomposition of a connected-graph Laplacian.
/// Throws ParameterError for asymmetric input and StructureError when the
/// second eigenvalue is numerically zero.
RealSpectrum eigendecompose(const RealMatrix& laplacian);

MultiplicityGroups multiplicity_partition(const RealVector& eigenvalues, double tol);
MultiplicityGroups multiplicity_partition(const RealSpectrum& spec, double tol);

/// Whether the spectrum admits a Fourier basis with u_k = conj(u_{N+2-k}).
/// Odd N needs no odd-multiplicity nonzero eigenvalue, even N exactly one.
NormalSupport supports_normal_atomic(const RealSpectrum& spec, double tol);

/// Conjugate-paired basis built from the real eigenvectors: paired columns
/// are (alpha_a +/- i alpha_b)/sqrt(2) drawn from one eigenspace, and for
/// even N the odd-multiplicity eigenvalue supplies the real middle column.
/// Throws NoNormalBasis when supports_normal_atomic is false.
FourierBasis normal_basis(const RealSpectrum& spec, double tol);

/// The real eigenvectors as a (complex-typed) basis, pairing p(k) = k.
FourierBasis real_basis(const RealSpectrum& spec);

/// Discrete Fourier basis u_k(j) = omega^{jk} / sqrt(n) with
/// omega = exp(2 pi i / n); pairing p(k) = n - k (0-based). No eigenvalues.
FourierBasis dft_basis(Index n);

/// Rayleigh quotients u_k* L u_k as column eigenvalues. Throws
/// ParameterError when some column is not an eigenvector of L within
/// 1e-8 * max(1, |L|).
FourierBasis attach_eigenvalues(const FourierBasis& basis, const RealMatrix& laplacian);

enum class Direction { forward, inverse };

/// forward: U* x; inverse: U x.
Signal gft(const FourierBasis& basis, const Signal& x, Direction direction);

}  // namespace gsp
