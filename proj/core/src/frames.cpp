#include "gsp/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gsp/errors.hpp"
#include "gsp/filters.hpp"

namespace gsp {

FrameDictionary build_frame(BasisPtr basis, const Signal& window,
                            const ComplexMatrix& responses, const FrameOptions& options) {
  if (!basis) throw ParameterError("frame needs a basis");
  const Index n = basis->size();
  if (window.size() != n) throw ParameterError("window length does not match the basis");
  if (responses.rows() != n) {
    throw ParameterError("response matrix must have one row per basis column");
  }
  const Index j_count = responses.cols();

  const double gram = max_abs(responses * responses.adjoint() - ComplexMatrix::Identity(n, n));
  if (j_count < n || !(gram <= options.orthonormality_tol)) {
    std::ostringstream msg;
    msg << "rows of the response matrix are not orthonormal: |A A* - I|_max = " << gram
        << " (J = " << j_count << ", N = " << n << ")";
    throw FrameCondition(msg.str(), gram);
  }

  FrameDictionary d;
  d.basis_ = basis;
  d.window_ = window;
  const double norm = window.norm();
  if (!(norm > 0.0)) throw DegenerateWindow("window is identically zero", 0, 0.0);
  if (options.normalize_window) {
    d.window_ /= norm;
    d.normalized_ = true;
  }
  d.window_hat_ = gft(*basis, d.window_, Direction::forward);
  d.responses_ = responses;
  d.gram_residual_ = gram;

  const ComplexMatrix& u = basis->matrix();
  d.weights_ = u.cwiseAbs2() * d.window_hat_.cwiseAbs2();
  for (Index v = 0; v < n; ++v) {
    if (!(d.weights_(v) > options.degenerate_threshold)) {
      std::ostringstream msg;
      msg << "window weight C_" << v + 1 << " = " << d.weights_(v)
          << " vanishes; exact reconstruction is impossible at vertex " << v + 1;
      throw DegenerateWindow(msg.str(), static_cast<std::size_t>(v), d.weights_(v));
    }
  }
  d.alpha_ = d.weights_.minCoeff();
  d.beta_ = d.weights_.maxCoeff();

  d.atoms_.resize(n, j_count * n);
  for (Index j = 0; j < j_count; ++j) {
    const Signal shifted = u * responses.col(j).cwiseProduct(d.window_hat_);
    for (Index k = 0; k < n; ++k) d.atoms_.col(j * n + k) = shifted.cwiseProduct(u.col(k));
  }
  return d;
}

ComplexMatrix power_responses(const FrequencyResponse& a) {
  const Index n = a.size();
  if (n < 1) throw ParameterError("power_responses needs a non-empty response");
  ComplexMatrix out(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Index row = 0; row < n; ++row) {
    Complex p(scale, 0.0);
    for (Index col = 0; col < n; ++col) {
      out(row, col) = p;
      p *= a(row);
    }
  }
  return out;
}

std::optional<UnitaryDecomposition> lemma_unitary_decompose(const FrequencyResponse& a,
                                                            double tol) {
  const Index n = a.size();
  if (n < 1) return std::nullopt;
  if (!is_atomic(a, tol).atomic) return std::nullopt;
  for (Index k = 0; k < n; ++k) {
    if (std::abs(std::abs(a(k)) - 1.0) > tol) return std::nullopt;
  }

  std::vector<double> phase(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) {
    phase[static_cast<std::size_t>(k)] = std::fmod(std::arg(a(k)) + kTwoPi, kTwoPi);
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
    return phase[static_cast<std::size_t>(x)] < phase[static_cast<std::size_t>(y)];
  });

  const double step = kTwoPi / static_cast<double>(n);
  const double first = phase[static_cast<std::size_t>(order[0])];
  for (Index k = 1; k < n; ++k) {
    const double offset = phase[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] - first;
    if (std::abs(offset - step * static_cast<double>(k)) > tol) return std::nullopt;
  }

  UnitaryDecomposition out;
  out.c = a(order[0]);
  out.permutation.assign(static_cast<std::size_t>(n), 0);
  for (Index k = 0; k < n; ++k) {
    out.permutation[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  }

  // rebuild P U C and compare against the power matrix
  const ComplexMatrix u = dft_basis(n).matrix();
  ComplexVector cdiag(n);
  Complex p(1.0, 0.0);
  for (Index j = 0; j < n; ++j) {
    cdiag(j) = p;
    p *= out.c;
  }
  const ComplexMatrix uc = u * cdiag.asDiagonal();
  ComplexMatrix rebuilt(n, n);
  for (Index i = 0; i < n; ++i) rebuilt.row(i) = uc.row(out.permutation[static_cast<std::size_t>(i)]);
  out.reproduction_error = max_abs(rebuilt - power_responses(a));
  return out;
}

ComplexMatrix analyze(const FrameDictionary& d, const Signal& f) {
  const Index n = d.size();
  if (f.size() != n) throw ParameterError("signal length does not match the frame");
  const ComplexVector flat = d.atoms().adjoint() * f;
  ComplexMatrix coeffs(d.response_count(), n);
  for (Index j = 0; j < d.response_count(); ++j) coeffs.row(j) = flat.segment(j * n, n).transpose();
  return coeffs;
}

Signal synthesize(const FrameDictionary& d, const ComplexMatrix& coefficients) {
  const Index n = d.size();
  if (coefficients.rows() != d.response_count() || coefficients.cols() != n) {
    throw ParameterError("coefficient matrix shape does not match the frame");
  }
  ComplexVector flat(d.response_count() * n);
  for (Index j = 0; j < d.response_count(); ++j) flat.segment(j * n, n) = coefficients.row(j).transpose();
  const Signal sum = d.atoms() * flat;
  return sum.cwiseQuotient(d.weights().cast<Complex>());
}

}  // namespace gsp
