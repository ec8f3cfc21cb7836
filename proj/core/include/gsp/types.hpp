#pragma once

#include <complex>

#include <Eigen/Dense>

namespace gsp {

using Index = Eigen::Index;
using Complex = std::complex<double>;

using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// A complex-valued function on the vertex set.
using Signal = Eigen::VectorXcd;

/// Frequency response of a graph filter, one component per basis column.
using FrequencyResponse = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Largest entry modulus of a dense matrix or vector.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace gsp
