#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gsp/types.hpp"

namespace gsp {

/// Undirected weighted graph stored as a dense symmetric adjacency matrix.
///
/// Construction validates the weights: square, finite, nonnegative, zero
/// diagonal and exactly symmetric. Connectivity is not required here but
/// every generator in this header returns a connected graph or throws.
class Graph {
 public:
  explicit Graph(RealMatrix weights);

  Index size() const noexcept { return weights_.rows(); }
  const RealMatrix& weights() const noexcept { return weights_; }

  /// d_i = sum_j w_ij.
  RealVector degrees() const;
  RealMatrix degree_matrix() const;
  /// L = D - W.
  RealMatrix laplacian() const;

  /// BFS over strictly positive weights.
  bool is_connected() const;

  struct Edge {
    Index i;
    Index j;
    double weight;
  };
  /// Edges with i < j, sorted by (i, j).
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.weights_ == b.weights_;
  }

 private:
  RealMatrix weights_;
};

/// Generating vector c of a symmetric circulant adjacency matrix,
/// w_ij = c_{(j - i) mod n}. Requires c_0 = 0 and c_{n-k} = c_k.
class GeneratingVector {
 public:
  explicit GeneratingVector(RealVector c);
  const RealVector& values() const noexcept { return c_; }
  Index size() const noexcept { return c_.size(); }

 private:
  RealVector c_;
};

namespace kind {
struct Ring {};
struct Path {};
struct Complete {};
struct CompleteBipartite {
  Index p = 1;
  Index q = 1;
};
struct Circulant {
  RealVector c;
};
}  // namespace kind

using GraphKind = std::variant<kind::Ring, kind::Path, kind::Complete,
                               kind::CompleteBipartite, kind::Circulant>;

/// Unit-weight graph of the requested family on n vertices (circulant uses
/// the generating vector's values). Throws ParameterError on bad input.
Graph generate(const GraphKind& kind, Index n);

/// Thresholded Gaussian-kernel sensor graph parameters. A default-constructed
/// value uses radius 0.15, sigma = radius / sqrt(2) and a threshold equal to
/// the kernel value at the cutoff distance.
struct SensorParams {
  double radius = 0.15;
  std::optional<double> sigma;
  std::optional<double> threshold;
  int max_attempts = 64;

  double resolved_sigma() const;
  double resolved_threshold() const;
};

struct SensorGraph {
  Graph graph;
  /// n x 2 vertex positions in the unit square.
  RealMatrix coordinates;
  /// Placement attempts used (1 when the first draw was connected).
  int attempts;
};

/// Random geometric graph in the unit square. Pure function of its inputs.
SensorGraph gen_sensor_with_coordinates(Index n, const SensorParams& params,
                                        std::uint64_t seed);
Graph gen_sensor(Index n, const SensorParams& params, std::uint64_t seed);

/// Generating vector when w_ij = c_{(j-i) mod n} within tol, else empty.
std::optional<GeneratingVector> is_circulant(const Graph& g, double tol = 1e-12);

/// Common degree when all row sums agree within tol, else empty.
std::optional<double> is_regular(const Graph& g, double tol = 1e-12);

}  // namespace gsp
