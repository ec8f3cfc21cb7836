#include "gsp/graph.hpp"

#include <cmath>
#include <queue>
#include <sstream>
#include <string>

#include "gsp/errors.hpp"
#include "gsp/rng.hpp"

namespace gsp {

Graph::Graph(RealMatrix weights) : weights_(std::move(weights)) {
  const Index n = weights_.rows();
  if (n < 1 || weights_.cols() != n) {
    throw ParameterError("graph weights must be a non-empty square matrix");
  }
  for (Index i = 0; i < n; ++i) {
    if (weights_(i, i) != 0.0) {
      throw ParameterError("graph weights must have a zero diagonal (vertex " +
                           std::to_string(i + 1) + ")");
    }
    for (Index j = 0; j < n; ++j) {
      const double w = weights_(i, j);
      if (!std::isfinite(w) || w < 0.0) {
        throw ParameterError("graph weights must be finite and nonnegative");
      }
      if (w != weights_(j, i)) {
        throw ParameterError("graph weights must be symmetric");
      }
    }
  }
}

RealVector Graph::degrees() const { return weights_.rowwise().sum(); }

RealMatrix Graph::degree_matrix() const { return degrees().asDiagonal(); }

RealMatrix Graph::laplacian() const {
  RealMatrix lap = -weights_;
  lap.diagonal() = degrees();
  return lap;
}

bool Graph::is_connected() const {
  const Index n = size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<Index> frontier;
  frontier.push(0);
  seen[0] = 1;
  Index reached = 1;
  while (!frontier.empty()) {
    const Index v = frontier.front();
    frontier.pop();
    for (Index u = 0; u < n; ++u) {
      if (weights_(v, u) > 0.0 && !seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == n;
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  const Index n = size();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (weights_(i, j) > 0.0) out.push_back({i, j, weights_(i, j)});
    }
  }
  return out;
}

GeneratingVector::GeneratingVector(RealVector c) : c_(std::move(c)) {
  const Index n = c_.size();
  if (n < 1) throw ParameterError("generating vector must be non-empty");
  if (c_(0) != 0.0) throw ParameterError("generating vector needs c_0 = 0");
  for (Index k = 1; k < n; ++k) {
    if (!std::isfinite(c_(k)) || c_(k) < 0.0) {
      throw ParameterError("generating vector entries must be finite and nonnegative");
    }
    if (c_(n - k) != c_(k)) {
      throw ParameterError("generating vector must satisfy c_{n-k} = c_k (k = " +
                           std::to_string(k) + ")");
    }
  }
}

namespace {

RealMatrix circulant_weights(const RealVector& c) {
  const Index n = c.size();
  RealMatrix w(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) w(i, j) = c(((j - i) % n + n) % n);
  }
  return w;
}

Graph require_connected(Graph g, const char* family) {
  if (!g.is_connected()) {
    throw ParameterError(std::string(family) + " parameters give a disconnected graph");
  }
  return g;
}

struct Generator {
  Index n;

  Graph operator()(const kind::Ring&) const {
    RealVector c = RealVector::Zero(n);
    c(1) = 1.0;
    c(n - 1) = 1.0;
    return Graph(circulant_weights(c));
  }

  Graph operator()(const kind::Path&) const {
    RealMatrix w = RealMatrix::Zero(n, n);
    for (Index i = 0; i + 1 < n; ++i) w(i, i + 1) = w(i + 1, i) = 1.0;
    return Graph(std::move(w));
  }

  Graph operator()(const kind::Complete&) const {
    RealMatrix w = RealMatrix::Ones(n, n);
    w.diagonal().setZero();
    return Graph(std::move(w));
  }

  Graph operator()(const kind::CompleteBipartite& b) const {
    if (b.p < 1 || b.q < 1 || b.p + b.q != n) {
      throw ParameterError("complete bipartite graph needs p, q >= 1 and p + q = n");
    }
    RealMatrix w = RealMatrix::Zero(n, n);
    w.topRightCorner(b.p, b.q).setOnes();
    w.bottomLeftCorner(b.q, b.p).setOnes();
    return Graph(std::move(w));
  }

  Graph operator()(const kind::Circulant& circ) const {
    if (circ.c.size() != n) {
      throw ParameterError("generating vector length must equal n");
    }
    GeneratingVector c(circ.c);
    return require_connected(Graph(circulant_weights(c.values())), "circulant");
  }
};

}  // namespace

Graph generate(const GraphKind& kind, Index n) {
  if (n < 2) throw ParameterError("graph generators need n >= 2");
  return std::visit(Generator{n}, kind);
}

double SensorParams::resolved_sigma() const {
  return sigma.value_or(radius / std::sqrt(2.0));
}

double SensorParams::resolved_threshold() const {
  if (threshold) return *threshold;
  const double s = resolved_sigma();
  return std::exp(-radius * radius / (2.0 * s * s));
}

SensorGraph gen_sensor_with_coordinates(Index n, const SensorParams& params,
                                        std::uint64_t seed) {
  const double sigma = params.resolved_sigma();
  const double threshold = params.resolved_threshold();
  if (n < 2) throw ParameterError("sensor graph needs n >= 2");
  if (!(params.radius > 0.0)) throw ParameterError("sensor radius must be positive");
  if (!(sigma > 0.0)) throw ParameterError("sensor sigma must be positive");
  if (!(threshold >= 0.0 && threshold < 1.0)) {
    throw ParameterError("sensor threshold must lie in [0, 1)");
  }
  if (params.max_attempts < 1) throw ParameterError("max_attempts must be >= 1");

  Rng rng(seed);
  RealMatrix xy(n, 2);
  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    for (Index i = 0; i < n; ++i) {
      xy(i, 0) = rng.uniform();
      xy(i, 1) = rng.uniform();
    }
    RealMatrix w = RealMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        const double d = (xy.row(i) - xy.row(j)).norm();
        if (d > params.radius) continue;
        const double k = std::exp(-d * d / (2.0 * sigma * sigma));
        if (k > threshold) w(i, j) = w(j, i) = k;
      }
    }
    Graph g(std::move(w));
    if (g.is_connected()) return {std::move(g), xy, attempt};
  }
  std::ostringstream msg;
  msg << "sensor graph not connected after " << params.max_attempts << " attempts";
  throw GenerationError(msg.str(), params.max_attempts);
}

Graph gen_sensor(Index n, const SensorParams& params, std::uint64_t seed) {
  return gen_sensor_with_coordinates(n, params, seed).graph;
}

std::optional<GeneratingVector> is_circulant(const Graph& g, double tol) {
  const Index n = g.size();
  const RealMatrix& w = g.weights();
  RealVector c = w.row(0).transpose();
  for (Index i = 1; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (std::abs(w(i, j) - c(((j - i) % n + n) % n)) > tol) return std::nullopt;
    }
  }
  // symmetric weights already force c_{n-k} = c_k up to tol; make it exact
  for (Index k = 1; k < n; ++k) {
    const double avg = 0.5 * (c(k) + c(n - k));
    c(k) = c(n - k) = avg;
  }
  return GeneratingVector(std::move(c));
}

std::optional<double> is_regular(const Graph& g, double tol) {
  const RealVector d = g.degrees();
  if ((d.array() - d(0)).abs().maxCoeff() > tol) return std::nullopt;
  return d(0);
}

}  // namespace gsp
