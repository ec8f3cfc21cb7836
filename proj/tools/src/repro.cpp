#include "gsp/cli/repro.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "gsp/cli/signals.hpp"
#include "gsp/cli/svg.hpp"
#include "gsp/errors.hpp"
#include "gsp/filters.hpp"
#include "gsp/graph.hpp"
#include "gsp/io.hpp"
#include "gsp/spectral.hpp"

namespace gsp::cli {

namespace {

constexpr const char* kConvention = "a_k = exp(+i*2*pi*(k-1)/N) (figure-caption upshift)";

struct FigureInfo {
  Figure figure;
  const char* name;
};

constexpr FigureInfo kFigures[] = {
    {Figure::fig1_ring_gaussian, "fig1_ring_gaussian"},
    {Figure::fig3_complete_pulse, "fig3_complete_pulse"},
    {Figure::fig4_bipartite_pulse, "fig4_bipartite_pulse"},
    {Figure::fig5_path_sine, "fig5_path_sine"},
    {Figure::fig6_sensor_gaussian, "fig6_sensor_gaussian"},
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

FrequencyResponse caption_response(Index n) {
  FrequencyResponse a(n);
  for (Index k = 0; k < n; ++k) {
    a(k) = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
  }
  return a;
}

double imag_fraction(const Signal& y) {
  const double total = y.squaredNorm();
  return total > 0.0 ? y.imag().squaredNorm() / total : 0.0;
}

struct Column {
  std::string label;
  Signal values;
};

std::string to_csv(const Signal& input, const std::vector<Column>& outputs) {
  std::ostringstream csv;
  csv << "# response " << kConvention << "\n";
  csv << "vertex,input";
  for (const auto& c : outputs) csv << ',' << c.label << "_re," << c.label << "_im";
  csv << '\n';
  for (Index v = 0; v < input.size(); ++v) {
    csv << v << ',' << num(input(v).real());
    for (const auto& c : outputs) {
      csv << ',' << num(c.values(v).real()) << ',' << num(c.values(v).imag());
    }
    csv << '\n';
  }
  return csv.str();
}

std::vector<double> part(const Signal& s, bool imag) {
  std::vector<double> out(static_cast<std::size_t>(s.size()));
  for (Index i = 0; i < s.size(); ++i) {
    out[static_cast<std::size_t>(i)] = imag ? s(i).imag() : s(i).real();
  }
  return out;
}

Index resolve_n(const ReproSpec& spec, Index fallback, Index minimum) {
  const Index n = spec.n.value_or(fallback);
  if (n < minimum) {
    throw ParameterError("figure needs n >= " + std::to_string(minimum));
  }
  return n;
}

BasisPtr circulant_basis(const Graph& g) {
  return std::make_shared<const FourierBasis>(attach_eigenvalues(dft_basis(g.size()), g.laplacian()));
}

}  // namespace

std::optional<Figure> figure_from_name(const std::string& name) {
  for (const auto& f : kFigures) {
    if (name == f.name) return f.figure;
  }
  return std::nullopt;
}

std::string figure_name(Figure f) {
  for (const auto& info : kFigures) {
    if (info.figure == f) return info.name;
  }
  return "unknown";
}

std::vector<std::string> figure_names() {
  std::vector<std::string> out;
  for (const auto& f : kFigures) out.emplace_back(f.name);
  return out;
}

ReproResult run_repro(const ReproSpec& spec) {
  ReproResult r;
  r.name = figure_name(spec.figure);
  nlohmann::json summary{{"figure", r.name}, {"convention", kConvention}};
  std::vector<Column> columns;
  std::vector<Panel> panels;

  switch (spec.figure) {
    case Figure::fig1_ring_gaussian: {
      const Index n = resolve_n(spec, 64, 4);
      const unsigned power = spec.power.value_or(10);
      const Graph g = generate(kind::Ring{}, n);
      const BasisPtr basis = circulant_basis(g);
      const FrequencyResponse a = caption_response(n);
      FrequencyResponse b = a;
      std::swap(b(1), b(2));
      r.input = gaussian_signal(n, n / 2, true);
      const Signal ya = apply(make_filter(basis, a), r.input, power);
      const Signal yb = apply(make_filter(basis, b), r.input, power);
      r.n = n;
      r.outputs = {ya, yb};
      r.max_imag = max_abs(ya.imag());
      r.imag_energy_fraction = imag_fraction(ya);
      r.max_imag_disordered = max_abs(yb.imag());
      columns = {{"Ha_pow", ya}, {"Hb_pow", yb}};
      panels = {{"x", part(r.input, false)},
                {"H_a^" + std::to_string(power) + " x", part(ya, false)},
                {"Re H_b^" + std::to_string(power) + " x", part(yb, false)},
                {"Im H_b^" + std::to_string(power) + " x", part(yb, true)}};
      summary["power"] = power;
      summary["max_imag_conforming"] = r.max_imag;
      summary["max_imag_disordered"] = *r.max_imag_disordered;
      summary["conforming_is_real"] = r.max_imag <= 1e-9;
      summary["disordered_is_complex"] = *r.max_imag_disordered > 1e-3;
      break;
    }
    case Figure::fig3_complete_pulse:
    case Figure::fig4_bipartite_pulse: {
      const bool bipartite = spec.figure == Figure::fig4_bipartite_pulse;
      const unsigned power = spec.power.value_or(3);
      Graph g = bipartite ? generate(kind::CompleteBipartite{5, 3}, 8)
                          : generate(kind::Complete{}, resolve_n(spec, 16, 2));
      if (bipartite && spec.n && *spec.n != 8) {
        throw ParameterError("fig4 uses the complete bipartite graph with p = 5, q = 3 (n = 8)");
      }
      const Index n = g.size();
      BasisPtr basis;
      if (bipartite) {
        const RealSpectrum s = eigendecompose(g.laplacian());
        basis = std::make_shared<const FourierBasis>(
            normal_basis(s, default_multiplicity_tol(s.eigenvalues)));
      } else {
        basis = circulant_basis(g);
      }
      const Filter f = make_filter(basis, caption_response(n));
      r.input = pulse_signal(n, 0);
      const Signal y1 = apply(f, r.input, 1);
      const Signal yp = apply(f, r.input, power);
      r.n = n;
      r.outputs = {y1, yp};
      r.max_imag = std::max(max_abs(y1.imag()), max_abs(yp.imag()));
      r.imag_energy_fraction = imag_fraction(y1);
      columns = {{"H_pow1", y1}, {"H_pow" + std::to_string(power), yp}};
      panels = {{"x", part(r.input, false)},
                {"H_a x", part(y1, false)},
                {"H_a^" + std::to_string(power) + " x", part(yp, false)}};
      summary["powers"] = {1, power};
      summary["max_imag"] = r.max_imag;
      break;
    }
    case Figure::fig5_path_sine:
    case Figure::fig6_sensor_gaussian: {
      const bool sensor = spec.figure == Figure::fig6_sensor_gaussian;
      const unsigned power = spec.power.value_or(1);
      std::optional<Graph> g;
      if (sensor) {
        if (!spec.seed) throw ParameterError("fig6_sensor_gaussian requires --seed");
        const Index n = resolve_n(spec, 500, 2);
        const SensorParams params;
        auto sg = gen_sensor_with_coordinates(n, params, *spec.seed);
        // Gaussian bump around the vertex nearest the square's center
        Index center = 0;
        (sg.coordinates.rowwise() - Eigen::RowVector2d(0.5, 0.5)).rowwise().squaredNorm().minCoeff(&center);
        r.input = gaussian_signal_geometric(sg.coordinates, center, params.radius);
        g = std::move(sg.graph);
        summary["seed"] = *spec.seed;
        summary["attempts"] = sg.attempts;
      } else {
        const Index n = resolve_n(spec, 64, 3);
        g = generate(kind::Path{}, n);
        r.input = sine_signal(n, 2.0);
      }
      const Index n = g->size();
      const RealSpectrum s = eigendecompose(g->laplacian());
      const BasisPtr basis = std::make_shared<const FourierBasis>(real_basis(s));
      const Signal y = apply(make_filter(basis, caption_response(n)), r.input, power);
      r.n = n;
      r.outputs = {y};
      r.max_imag = max_abs(y.imag());
      r.imag_energy_fraction = imag_fraction(y);
      columns = {{"H_pow" + std::to_string(power), y}};
      panels = {{"x", part(r.input, false)},
                {"Re H_a x", part(y, false)},
                {"Im H_a x", part(y, true)}};
      summary["power"] = power;
      summary["imag_energy_fraction"] = r.imag_energy_fraction;
      summary["max_imag"] = r.max_imag;
      summary["energy_moves_to_imaginary"] = r.imag_energy_fraction > 1e-4;
      break;
    }
  }

  summary["n"] = r.n;
  r.csv = to_csv(r.input, columns);
  r.svg = stem_plot_svg(r.name, panels);
  r.summary_json = summary.dump(2) + "\n";
  return r;
}

std::vector<std::filesystem::path> write_repro(const ReproResult& result,
                                               const std::filesystem::path& outdir) {
  const auto csv = outdir / (result.name + ".csv");
  const auto svg = outdir / (result.name + ".svg");
  const auto json = outdir / (result.name + ".json");
  io::write_text(csv, result.csv);
  io::write_text(svg, result.svg);
  io::write_text(json, result.summary_json);

  if (io::read_text(csv) != result.csv) throw ParameterError("CSV verification failed: " + csv.string());
  const std::string svg_back = io::read_text(svg);
  if (svg_back.rfind("<svg", 0) != 0 || svg_back.find("</svg>") == std::string::npos) {
    throw ParameterError("SVG verification failed: " + svg.string());
  }
  if (!nlohmann::json::accept(io::read_text(json))) {
    throw ParameterError("summary verification failed: " + json.string());
  }
  return {csv, svg, json};
}

}  // namespace gsp::cli
