#include "gsp/filters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsp/errors.hpp"

namespace gsp {

namespace {

ComplexMatrix synthesize_operator(const FourierBasis& basis, const FrequencyResponse& a) {
  const ComplexMatrix& u = basis.matrix();
  return u * a.asDiagonal() * u.adjoint();
}

}  // namespace

Filter::Filter(BasisPtr basis, FrequencyResponse response)
    : basis_(std::move(basis)), response_(std::move(response)) {
  if (!basis_) throw ParameterError("filter needs a basis");
  if (response_.size() != basis_->size()) {
    throw ParameterError("frequency response length " + std::to_string(response_.size()) +
                         " does not match basis size " + std::to_string(basis_->size()));
  }
  if (!response_.allFinite()) throw ParameterError("frequency response must be finite");
  matrix_ = synthesize_operator(*basis_, response_);
}

double Filter::cache_residual() const {
  return max_abs(matrix_ - synthesize_operator(*basis_, response_));
}

Filter make_filter(BasisPtr basis, FrequencyResponse response) {
  return Filter(std::move(basis), std::move(response));
}

RealVector uniform_thetas(Index n) {
  RealVector t(n);
  for (Index k = 0; k < n; ++k) t(k) = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
  return t;
}

namespace {

bool thetas_normal(const RealVector& t, double tol) {
  const Index n = t.size();
  if (std::abs(t(0)) > tol) return false;
  for (Index k = 1; k <= n / 2; ++k) {
    if (std::abs(t(k) + t(n - k) - kTwoPi) > tol) return false;
  }
  return true;
}

bool thetas_uniform(const RealVector& t, double tol) {
  const Index n = t.size();
  std::vector<double> sorted(t.data(), t.data() + n);
  std::sort(sorted.begin(), sorted.end());
  for (Index k = 0; k < n; ++k) {
    const double grid = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    if (std::abs(sorted[static_cast<std::size_t>(k)] - grid) > tol) return false;
  }
  return true;
}

}  // namespace

ThetaFilter make_from_thetas(BasisPtr basis, const RealVector& thetas,
                             ShiftDirection direction, double tol) {
  for (Index k = 0; k < thetas.size(); ++k) {
    if (!(thetas(k) >= 0.0 && thetas(k) < kTwoPi)) {
      throw ParameterError("theta_" + std::to_string(k + 1) + " lies outside [0, 2 pi)");
    }
  }
  const double sign = direction == ShiftDirection::down ? -1.0 : 1.0;
  FrequencyResponse a(thetas.size());
  for (Index k = 0; k < thetas.size(); ++k) a(k) = std::polar(1.0, sign * thetas(k));
  Filter f(std::move(basis), std::move(a));
  return {std::move(f), thetas_normal(thetas, tol), thetas_uniform(thetas, tol)};
}

Signal apply(const Filter& f, const Signal& x, unsigned power) {
  if (x.size() != f.size()) throw ParameterError("signal length does not match the filter");
  if (power == 0) return x;
  Signal hat = gft(f.basis(), x, Direction::forward);
  FrequencyResponse gain = f.response();
  for (Index k = 0; k < gain.size(); ++k) gain(k) = std::pow(gain(k), static_cast<int>(power));
  hat = hat.cwiseProduct(gain);
  return gft(f.basis(), hat, Direction::inverse);
}

AtomicityResult is_atomic(const FrequencyResponse& a, double tol) {
  double gap = std::numeric_limits<double>::infinity();
  for (Index j = 0; j < a.size(); ++j) {
    for (Index k = j + 1; k < a.size(); ++k) gap = std::min(gap, std::abs(a(j) - a(k)));
  }
  return {gap > tol, gap};
}

std::optional<Pairing> detect_conjugate_pairing(const FourierBasis& basis, double tol) {
  const Index n = basis.size();
  const ComplexMatrix g = basis.matrix().transpose() * basis.matrix();
  Pairing out{std::vector<Index>(static_cast<std::size_t>(n), 0), ComplexVector::Ones(n)};

  // The constant column must be real: u_1^T u_1 = 1.
  if (std::abs(g(0, 0) - Complex(1.0, 0.0)) > tol) return std::nullopt;

  for (Index k = 1; k < n; ++k) {
    Index partner = -1;
    for (Index j = 0; j < n; ++j) {
      const double m = std::abs(g(j, k));
      if (m >= 1.0 - tol) {
        if (partner >= 0 || j == 0) return std::nullopt;
        partner = j;
      } else if (m > tol) {
        return std::nullopt;
      }
    }
    if (partner < 0) return std::nullopt;
    out.partner[static_cast<std::size_t>(k)] = partner;
    out.scale(k) = g(partner, k) / std::abs(g(partner, k));
  }
  if (!out.is_involution()) return std::nullopt;
  return out;
}

double smoothness(const RealMatrix& laplacian, const Signal& x) {
  if (laplacian.rows() != x.size() || laplacian.cols() != x.size()) {
    throw ParameterError("signal length does not match the Laplacian");
  }
  return x.dot(laplacian.cast<Complex>() * x).real();
}

double spectral_smoothness(const FourierBasis& basis, const Signal& x) {
  if (!basis.has_eigenvalues()) {
    throw ParameterError("spectral smoothness needs basis eigenvalues");
  }
  const Signal hat = gft(basis, x, Direction::forward);
  return basis.eigenvalues().dot(hat.cwiseAbs2());
}

PolynomialExpansion polynomial_expand(const Filter& s, const FrequencyResponse& b,
                                      bool verify_matrix, double tol) {
  const FrequencyResponse& a = s.response();
  const Index n = a.size();
  if (b.size() != n) throw ParameterError("target response length does not match the filter");
  const auto atomicity = is_atomic(a, tol);
  if (!atomicity.atomic) {
    throw NotAtomic("filter is not atomic: response components repeat (min gap " +
                        std::to_string(atomicity.min_gap) + ")",
                    atomicity.min_gap);
  }

  ComplexMatrix v(n, n);
  for (Index row = 0; row < n; ++row) {
    Complex p(1.0, 0.0);
    for (Index col = 0; col < n; ++col) {
      v(row, col) = p;
      p *= a(row);
    }
  }
  PolynomialExpansion out;
  out.coefficients = v.partialPivLu().solve(b);
  out.residual = max_abs(v * out.coefficients - b);
  out.ill_conditioned = out.residual > 1e-6 * std::max(max_abs(b), 1e-300);

  if (verify_matrix) {
    // Horner on the dense operator, independent of the spectral solve.
    const ComplexMatrix& h = s.matrix();
    const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
    ComplexMatrix acc = out.coefficients(n - 1) * eye;
    for (Index k = n - 2; k >= 0; --k) acc = acc * h + out.coefficients(k) * eye;
    const ComplexMatrix hb = s.basis().matrix() * b.asDiagonal() * s.basis().matrix().adjoint();
    out.matrix_residual = max_abs(acc - hb);
  }
  return out;
}

RealMatrix classical_shift_matrix(Index n) {
  if (n < 1) throw ParameterError("classical_shift_matrix needs n >= 1");
  RealMatrix s = RealMatrix::Zero(n, n);
  for (Index m = 0; m < n; ++m) s(m, (m - 1 + n) % n) = 1.0;
  return s;
}

}  // namespace gsp
