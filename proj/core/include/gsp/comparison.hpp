#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gsp/graph.hpp"
#include "gsp/properties.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

// Shift operators proposed elsewhere in the literature, each written as a
// graph filter on the given basis so it can go through the property battery.
namespace shift {
/// Adjacency matrix W; a filter only on regular graphs, a_k = d - lambda_k.
struct Adjacency {};
/// a_k = exp(-i pi sqrt(lambda_k / rho)); rho defaults to lambda_max.
struct Girault {
  std::optional<double> rho;
};
/// a_k = exp(i phi_k).
struct Gavili {
  std::vector<double> phi;
};
/// exp(i h L): a_k = exp(i h lambda_k).
struct Schrodinger {
  double h = 1.0;
};
/// exp(i h sqrt(L)): a_k = exp(i h sqrt(lambda_k)).
struct SqrtSchrodinger {
  double h = 1.0;
};
}  // namespace shift

using ComparisonKind = std::variant<shift::Adjacency, shift::Girault, shift::Gavili,
                                    shift::Schrodinger, shift::SqrtSchrodinger>;

struct ComparisonResult {
  /// Empty when the construction is not a graph filter on this graph.
  std::optional<Filter> filter;
  std::optional<PropertyReport> report;
  std::string diagnostic;
};

std::string comparison_name(const ComparisonKind& kind);

/// Builds the comparison operator on `basis`, whose column eigenvalues must
/// be attached. The adjacency operator on a non-regular graph returns a
/// diagnostic-only result rather than throwing.
ComparisonResult comparison_shift(const Graph& g, const RealSpectrum& spec,
                                  const BasisPtr& basis, const ComparisonKind& kind,
                                  const PropertyOptions& options = {});

}  // namespace gsp
