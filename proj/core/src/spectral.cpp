#include "gsp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gsp/errors.hpp"

namespace gsp {

bool Pairing::is_involution() const {
  const auto n = static_cast<Index>(partner.size());
  for (Index k = 0; k < n; ++k) {
    const Index j = partner[static_cast<std::size_t>(k)];
    if (j < 0 || j >= n || partner[static_cast<std::size_t>(j)] != k) return false;
  }
  return true;
}

FourierBasis::FourierBasis(ComplexMatrix u, RealVector eigenvalues,
                           std::optional<Pairing> pairing)
    : u_(std::move(u)), eigenvalues_(std::move(eigenvalues)), pairing_(std::move(pairing)) {
  if (u_.rows() < 1 || u_.rows() != u_.cols()) {
    throw ParameterError("Fourier basis must be a non-empty square matrix");
  }
  if (eigenvalues_.size() != 0 && eigenvalues_.size() != u_.rows()) {
    throw ParameterError("basis eigenvalues must match the number of columns");
  }
  if (pairing_ && (static_cast<Index>(pairing_->partner.size()) != u_.rows() ||
                   pairing_->scale.size() != u_.rows())) {
    throw ParameterError("pairing size must match the basis");
  }
}

double FourierBasis::unitarity_residual() const {
  const Index n = size();
  return max_abs(u_.adjoint() * u_ - ComplexMatrix::Identity(n, n));
}

std::vector<std::size_t> MultiplicityGroups::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(g.columns.size());
  return out;
}

double default_multiplicity_tol(const RealVector& eigenvalues) {
  const double top = eigenvalues.size() ? eigenvalues.maxCoeff() : 0.0;
  return 1e-8 * std::max(1.0, top);
}

RealSpectrum eigendecompose(const RealMatrix& laplacian) {
  const Index n = laplacian.rows();
  if (n < 1 || laplacian.cols() != n) {
    throw ParameterError("Laplacian must be a non-empty square matrix");
  }
  const double scale = std::max(1.0, max_abs(laplacian));
  if (max_abs(laplacian - laplacian.transpose()) > 1e-12 * scale) {
    throw ParameterError("Laplacian must be symmetric");
  }
  if (max_abs(laplacian.rowwise().sum()) > 1e-10 * scale * static_cast<double>(n)) {
    throw ParameterError("matrix is not a graph Laplacian (nonzero row sums)");
  }

  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(laplacian);
  if (solver.info() != Eigen::Success) {
    throw StructureError("symmetric eigensolver did not converge");
  }
  RealSpectrum spec{solver.eigenvalues(), solver.eigenvectors()};

  // Sign convention: first entry above noise level is positive.
  for (Index k = 0; k < n; ++k) {
    auto col = spec.vectors.col(k);
    for (Index i = 0; i < n; ++i) {
      if (std::abs(col(i)) > 1e-10) {
        if (col(i) < 0.0) col = -col;
        break;
      }
    }
  }
  spec.eigenvalues(0) = 0.0;
  spec.vectors.col(0).setConstant(1.0 / std::sqrt(static_cast<double>(n)));

  if (n > 1 && spec.eigenvalues(1) <= default_multiplicity_tol(spec.eigenvalues)) {
    std::ostringstream msg;
    msg << "graph is disconnected: second Laplacian eigenvalue " << spec.eigenvalues(1)
        << " is numerically zero";
    throw StructureError(msg.str());
  }
  return spec;
}

MultiplicityGroups multiplicity_partition(const RealVector& eigenvalues, double tol) {
  MultiplicityGroups out{{}, tol};
  for (Index k = 0; k < eigenvalues.size(); ++k) {
    if (out.groups.empty() ||
        eigenvalues(k) - eigenvalues(out.groups.back().columns.back()) > tol) {
      out.groups.push_back({eigenvalues(k), {}});
    }
    out.groups.back().columns.push_back(k);
  }
  return out;
}

MultiplicityGroups multiplicity_partition(const RealSpectrum& spec, double tol) {
  return multiplicity_partition(spec.eigenvalues, tol);
}

NormalSupport supports_normal_atomic(const RealSpectrum& spec, double tol) {
  const auto groups = multiplicity_partition(spec, tol);
  NormalSupport out{false, {}};
  for (const auto& g : groups.groups) {
    const bool zero_group = g.columns.front() == 0;
    if (!zero_group && g.columns.size() % 2 == 1) out.odd_eigenvalues.push_back(g.eigenvalue);
  }
  const std::size_t required = spec.size() % 2 == 0 ? 1 : 0;
  out.supported = out.odd_eigenvalues.size() == required;
  return out;
}

FourierBasis normal_basis(const RealSpectrum& spec, double tol) {
  const auto support = supports_normal_atomic(spec, tol);
  if (!support.supported) {
    std::ostringstream msg;
    msg << "no conjugate-paired Fourier basis: " << support.odd_eigenvalues.size()
        << " nonzero eigenvalue(s) of odd multiplicity";
    if (!support.odd_eigenvalues.empty()) {
      msg << " {";
      for (std::size_t i = 0; i < support.odd_eigenvalues.size(); ++i) {
        msg << (i ? ", " : "") << support.odd_eigenvalues[i];
      }
      msg << "}";
    }
    msg << " for N = " << spec.size();
    throw NoNormalBasis(msg.str(), support.odd_eigenvalues);
  }

  const Index n = spec.size();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  RealVector lambda = RealVector::Zero(n);
  u.col(0) = spec.vectors.col(0).cast<Complex>();

  Index next_slot = 1;
  const auto groups = multiplicity_partition(spec, tol);
  for (const auto& g : groups.groups) {
    if (g.columns.front() == 0) continue;
    std::size_t paired = g.columns.size();
    if (paired % 2 == 1) {
      // only reachable for even n: the self-paired middle column
      const Index last = g.columns.back();
      u.col(n / 2) = spec.vectors.col(last).cast<Complex>();
      lambda(n / 2) = spec.eigenvalues(last);
      --paired;
    }
    for (std::size_t m = 0; m + 1 < paired; m += 2) {
      const Index a = g.columns[m];
      const Index b = g.columns[m + 1];
      const Index k = next_slot++;
      const Index mirror = n - k;
      const ComplexVector re = spec.vectors.col(a).cast<Complex>();
      const ComplexVector im = spec.vectors.col(b).cast<Complex>();
      u.col(k) = inv_sqrt2 * (re + i_unit * im);
      u.col(mirror) = inv_sqrt2 * (re - i_unit * im);
      const double mean = 0.5 * (spec.eigenvalues(a) + spec.eigenvalues(b));
      lambda(k) = lambda(mirror) = mean;
    }
  }

  Pairing pairing{std::vector<Index>(static_cast<std::size_t>(n)), ComplexVector::Ones(n)};
  pairing.partner[0] = 0;
  for (Index k = 1; k < n; ++k) pairing.partner[static_cast<std::size_t>(k)] = n - k;
  return FourierBasis(std::move(u), std::move(lambda), std::move(pairing));
}

FourierBasis real_basis(const RealSpectrum& spec) {
  const Index n = spec.size();
  Pairing pairing{std::vector<Index>(static_cast<std::size_t>(n)), ComplexVector::Ones(n)};
  for (Index k = 0; k < n; ++k) pairing.partner[static_cast<std::size_t>(k)] = k;
  return FourierBasis(spec.vectors.cast<Complex>(), spec.eigenvalues, std::move(pairing));
}

FourierBasis dft_basis(Index n) {
  if (n < 1) throw ParameterError("dft_basis needs n >= 1");
  ComplexMatrix u(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < n; ++k) {
      // reduce the exponent first so large n keeps full phase accuracy
      const Index e = (j * k) % n;
      const double phase = kTwoPi * static_cast<double>(e) / static_cast<double>(n);
      u(j, k) = norm * Complex(std::cos(phase), std::sin(phase));
    }
  }
  Pairing pairing{std::vector<Index>(static_cast<std::size_t>(n)), ComplexVector::Ones(n)};
  pairing.partner[0] = 0;
  for (Index k = 1; k < n; ++k) pairing.partner[static_cast<std::size_t>(k)] = n - k;
  return FourierBasis(std::move(u), RealVector(), std::move(pairing));
}

FourierBasis attach_eigenvalues(const FourierBasis& basis, const RealMatrix& laplacian) {
  const Index n = basis.size();
  if (laplacian.rows() != n || laplacian.cols() != n) {
    throw ParameterError("Laplacian size does not match the basis");
  }
  const ComplexMatrix lu = laplacian.cast<Complex>() * basis.matrix();
  RealVector lambda(n);
  for (Index k = 0; k < n; ++k) {
    lambda(k) = basis.column(k).dot(lu.col(k)).real();
  }
  const double tol = 1e-8 * std::max(1.0, lambda.maxCoeff());
  for (Index k = 0; k < n; ++k) {
    if (max_abs(lu.col(k) - lambda(k) * basis.column(k)) > tol) {
      throw ParameterError("basis column " + std::to_string(k + 1) +
                           " is not an eigenvector of the Laplacian");
    }
  }
  return FourierBasis(basis.matrix(), std::move(lambda), basis.pairing());
}

Signal gft(const FourierBasis& basis, const Signal& x, Direction direction) {
  if (x.size() != basis.size()) {
    throw ParameterError("signal length does not match the basis");
  }
  if (direction == Direction::forward) return basis.matrix().adjoint() * x;
  return basis.matrix() * x;
}

}  // namespace gsp
