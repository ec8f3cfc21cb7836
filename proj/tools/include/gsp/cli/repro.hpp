#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gsp/types.hpp"

namespace gsp::cli {

enum class Figure {
  fig1_ring_gaussian,
  fig3_complete_pulse,
  fig4_bipartite_pulse,
  fig5_path_sine,
  fig6_sensor_gaussian,
};

std::optional<Figure> figure_from_name(const std::string& name);
std::string figure_name(Figure f);
std::vector<std::string> figure_names();

/// Figure pipeline parameters; unset fields take the figure's default.
struct ReproSpec {
  Figure figure = Figure::fig1_ring_gaussian;
  std::optional<Index> n;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> power;
};

struct ReproResult {
  std::string name;
  std::string csv;
  std::string svg;
  std::string summary_json;

  Index n = 0;
  /// |Im(y)|^2 / |y|^2 of the (first) filtered output.
  double imag_energy_fraction = 0.0;
  /// max |Im(y)| of the (first) filtered output.
  double max_imag = 0.0;
  /// fig1 only: max |Im(H_b^p x)| for the disordered response.
  std::optional<double> max_imag_disordered;
  /// Filtered outputs, one per column of the CSV (for tests).
  std::vector<Signal> outputs;
  Signal input;
};

/// Deterministic figure pipeline. The response follows the figure captions,
/// a_k = exp(+i 2 pi (k-1) / N); the CSV header records this.
/// Throws ParameterError when fig6 is requested without a seed.
ReproResult run_repro(const ReproSpec& spec);

/// Writes <name>.csv, <name>.svg and <name>.json into `outdir`, re-reading
/// each file to confirm it parses.
std::vector<std::filesystem::path> write_repro(const ReproResult& result,
                                               const std::filesystem::path& outdir);

}  // namespace gsp::cli
