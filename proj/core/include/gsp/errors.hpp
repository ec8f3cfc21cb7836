#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad sizes, out-of-range parameters, broken files.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of the requested construction does not hold.
/// Distinct from ParameterError so front ends can report it separately.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Graph is not connected (second Laplacian eigenvalue is numerically zero).
class StructureError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Random generator could not produce a connected graph.
class GenerationError : public PreconditionError {
 public:
  GenerationError(const std::string& what, int attempts)
      : PreconditionError(what), attempts_(attempts) {}
  int attempts() const noexcept { return attempts_; }

 private:
  int attempts_;
};

/// The spectrum does not admit a conjugate-paired (normal) Fourier basis.
class NoNormalBasis : public PreconditionError {
 public:
  NoNormalBasis(const std::string& what, std::vector<double> odd_groups)
      : PreconditionError(what), odd_groups_(std::move(odd_groups)) {}
  /// Nonzero eigenvalues whose multiplicity is odd.
  const std::vector<double>& odd_groups() const noexcept { return odd_groups_; }

 private:
  std::vector<double> odd_groups_;
};

/// Polynomial expansion requested in a filter whose response repeats a value.
class NotAtomic : public PreconditionError {
 public:
  NotAtomic(const std::string& what, double min_gap)
      : PreconditionError(what), min_gap_(min_gap) {}
  double min_gap() const noexcept { return min_gap_; }

 private:
  double min_gap_;
};

/// Rows of the frame response matrix are not orthonormal.
class FrameCondition : public PreconditionError {
 public:
  FrameCondition(const std::string& what, double gram_residual)
      : PreconditionError(what), gram_residual_(gram_residual) {}
  double gram_residual() const noexcept { return gram_residual_; }

 private:
  double gram_residual_;
};

/// Some vertex weight C_n of the window vanishes, so 1/C_n is undefined.
class DegenerateWindow : public PreconditionError {
 public:
  DegenerateWindow(const std::string& what, std::size_t vertex, double weight)
      : PreconditionError(what), vertex_(vertex), weight_(weight) {}
  /// 0-based vertex index.
  std::size_t vertex() const noexcept { return vertex_; }
  double weight() const noexcept { return weight_; }

 private:
  std::size_t vertex_;
  double weight_;
};

}  // namespace gsp
