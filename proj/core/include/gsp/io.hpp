#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gsp/comparison.hpp"
#include "gsp/filters.hpp"
#include "gsp/frames.hpp"
#include "gsp/graph.hpp"
#include "gsp/properties.hpp"
#include "gsp/spectral.hpp"

// Serialized formats. All vertex and column indices in files are 0-based.
// Parsers throw ParameterError on malformed input.
namespace gsp::io {

std::string read_text(const std::filesystem::path& path);
/// Writes atomically enough for our purposes: truncate then write.
void write_text(const std::filesystem::path& path, std::string_view text);

// Graph: {"n": N, "edges": [[i, j, w], ...]} with i < j, edges sorted.
std::string graph_to_json(const Graph& g);
/// Rejects self-loops, duplicate edges (in either orientation), indices out
/// of range and weights that are not finite and positive.
Graph graph_from_json(std::string_view text);

// Basis: {"n", "eigenvalues", "U_real", "U_imag"} row-major, with an
// optional "pairing": {"partner": [...], "c_real": [...], "c_imag": [...]}.
std::string basis_to_json(const FourierBasis& basis);
/// Validates |U*U - I|_max <= unitarity_tol.
FourierBasis basis_from_json(std::string_view text, double unitarity_tol = 1e-9);

/// Declarative filter description used by the command line.
struct FilterSpec {
  enum class Kind { thetas, explicit_response, comparison };
  Kind kind = Kind::thetas;
  RealVector thetas;
  ShiftDirection direction = ShiftDirection::down;
  FrequencyResponse response;
  ComparisonKind comparison = shift::Adjacency{};
};

// {"kind": "thetas"|"explicit"|"comparison", "thetas": [...],
//  "direction": "down"|"up", "a_real": [...], "a_imag": [...],
//  "comparison": {"kind": ..., "params": {...}}}
std::string filter_spec_to_json(const FilterSpec& spec);
FilterSpec filter_spec_from_json(std::string_view text);

/// Builds the filter a spec describes. Comparison specs that do not yield a
/// filter (adjacency on a non-regular graph) throw PreconditionError.
Filter realize_filter(const FilterSpec& spec, const Graph& g, const RealSpectrum& spectrum,
                      const BasisPtr& basis);

std::string report_to_json(const PropertyReport& report);
PropertyReport report_from_json(std::string_view text);

/// Window, responses, weights C_n and bounds.
std::string frame_to_json(const FrameDictionary& d);

struct FrameSummary {
  Index n;
  Index responses;
  RealVector weights;
  double lower_bound;
  double upper_bound;
};
FrameSummary frame_summary_from_json(std::string_view text);

/// Header "j,k,re,im", one row per coefficient, j-major.
std::string coefficients_to_csv(const ComplexMatrix& coefficients);
ComplexMatrix coefficients_from_csv(std::string_view text);

}  // namespace gsp::io
