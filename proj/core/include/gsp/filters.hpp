#pragma once

#include <optional>
#include <vector>

#include "gsp/spectral.hpp"
#include "gsp/types.hpp"

namespace gsp {

/// Default tolerance for every filter verdict.
inline constexpr double kDefaultTol = 1e-9;

/// Graph filter H_a = U diag(a) U*, with the dense operator cached.
class Filter {
 public:
  Filter(BasisPtr basis, FrequencyResponse response);

  const FourierBasis& basis() const noexcept { return *basis_; }
  const BasisPtr& basis_ptr() const noexcept { return basis_; }
  const FrequencyResponse& response() const noexcept { return response_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index size() const noexcept { return response_.size(); }

  /// max |H - U diag(a) U*|, recomputed from scratch.
  double cache_residual() const;

 private:
  BasisPtr basis_;
  FrequencyResponse response_;
  ComplexMatrix matrix_;
};

Filter make_filter(BasisPtr basis, FrequencyResponse response);

/// Sign of the phase in a_k = exp(-+ i theta_k). `down` reproduces the
/// classical downshift (Sx)(n) = x(n-1) on the DFT basis; `up` is its inverse.
enum class ShiftDirection { down, up };

struct ThetaFilter {
  Filter filter;
  /// theta_1 = 0 and theta_k + theta_{N+2-k} = 2 pi for k = 2..floor(N/2)+1.
  bool normal_condition;
  /// {theta_k} equals {2 pi (k-1) / N} as a set.
  bool periodic_condition;
};

/// a_k = exp(-i theta_k) (or exp(+i theta_k) for ShiftDirection::up).
/// Throws ParameterError when some theta lies outside [0, 2 pi).
ThetaFilter make_from_thetas(BasisPtr basis, const RealVector& thetas,
                             ShiftDirection direction = ShiftDirection::down,
                             double tol = kDefaultTol);

/// theta_k = 2 pi (k-1) / N.
RealVector uniform_thetas(Index n);

/// U diag(a^power) U* x computed on the spectral side.
Signal apply(const Filter& f, const Signal& x, unsigned power = 1);

struct AtomicityResult {
  bool atomic;
  /// min_{j<k} |a_j - a_k|; +inf for N = 1.
  double min_gap;
};

/// Powers of H_a span every filter iff the components of a are distinct.
AtomicityResult is_atomic(const FrequencyResponse& a, double tol = kDefaultTol);

/// Looks for an involution p and unit scalars c with u_k = c_k conj(u_{p(k)})
/// by inspecting G = U^T U column by column. Empty when any column has its
/// mass split over several partners.
std::optional<Pairing> detect_conjugate_pairing(const FourierBasis& basis,
                                                double tol = 1e-8);

/// sigma(x) = x* L x.
double smoothness(const RealMatrix& laplacian, const Signal& x);
/// sum_k lambda_k |x_hat(k)|^2; needs basis eigenvalues.
double spectral_smoothness(const FourierBasis& basis, const Signal& x);

struct PolynomialExpansion {
  /// c_0..c_{N-1} with H_b = sum_k c_k H_a^k.
  ComplexVector coefficients;
  /// |V(a) c - b|_inf.
  double residual;
  /// |sum_k c_k H_a^k - H_b|_max, when verified.
  std::optional<double> matrix_residual;
  /// residual above 1e-6 |b|_inf.
  bool ill_conditioned;
};

/// Solves the Vandermonde system V(a) c = b with partial-pivot LU.
/// Throws NotAtomic when the response of `s` has repeated components.
PolynomialExpansion polynomial_expand(const Filter& s, const FrequencyResponse& b,
                                      bool verify_matrix = true,
                                      double tol = kDefaultTol);

/// Downshift permutation: (Sx)_m = x_{m-1 mod n}.
RealMatrix classical_shift_matrix(Index n);

}  // namespace gsp
