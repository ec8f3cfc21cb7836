#include "gsp/cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsp/cli/repro.hpp"
#include "gsp/cli/signals.hpp"
#include "gsp/gsp.hpp"

namespace gsp::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path output_path(const std::string& p) {
  fs::path path(p);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("GSP_OUTPUT_DIR"); dir && *dir) return fs::path(dir) / path;
  }
  return path;
}

void write_checked(const fs::path& path, const std::string& text,
                   const std::function<void(const std::string&)>& validate) {
  io::write_text(path, text);
  const std::string back = io::read_text(path);
  if (back != text) throw ParameterError("re-read of " + path.string() + " differs from what was written");
  validate(back);
}

void write_json(const fs::path& path, const json& j) {
  write_checked(path, j.dump(2) + "\n", [&](const std::string& s) {
    if (!json::accept(s)) throw ParameterError(path.string() + " is not valid JSON");
  });
}

json cvec(const ComplexVector& v) {
  json re = json::array(), im = json::array();
  for (Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return {{"real", re}, {"imag", im}};
}

// ---------------------------------------------------------------------------
// Shared graph / basis / filter resolution

struct Context {
  Graph graph;
  RealSpectrum spectrum;
  BasisPtr basis;
  std::string basis_kind;
};

Context load_context(const std::string& graph_path, const std::string& basis_choice) {
  Graph g = io::graph_from_json(io::read_text(graph_path));
  if (!g.is_connected()) throw StructureError("graph is disconnected");
  RealSpectrum s = eigendecompose(g.laplacian());
  const double tol = default_multiplicity_tol(s.eigenvalues);

  std::string kind = basis_choice;
  if (kind == "auto") {
    if (is_circulant(g)) {
      kind = "dft";
    } else if (supports_normal_atomic(s, tol).supported) {
      kind = "normal";
    } else {
      kind = "real";
    }
  }
  BasisPtr basis;
  if (kind == "dft") {
    basis = std::make_shared<const FourierBasis>(attach_eigenvalues(dft_basis(g.size()), g.laplacian()));
  } else if (kind == "normal") {
    basis = std::make_shared<const FourierBasis>(normal_basis(s, tol));
  } else if (kind == "real") {
    basis = std::make_shared<const FourierBasis>(real_basis(s));
  } else {
    throw ParameterError("unknown basis \"" + basis_choice + "\" (auto|real|normal|dft)");
  }
  return {std::move(g), std::move(s), std::move(basis), kind};
}

io::FilterSpec preset_spec(const std::string& preset, Index n) {
  io::FilterSpec spec;
  spec.kind = io::FilterSpec::Kind::thetas;
  spec.thetas = uniform_thetas(n);
  if (preset == "classical-shift") {
    spec.direction = ShiftDirection::down;
  } else if (preset == "caption") {
    spec.direction = ShiftDirection::up;
  } else if (preset == "disordered") {
    if (n < 4) throw ParameterError("disordered preset needs n >= 4");
    spec.direction = ShiftDirection::up;
    std::swap(spec.thetas(1), spec.thetas(2));
  } else {
    throw ParameterError("unknown preset \"" + preset + "\" (classical-shift|caption|disordered)");
  }
  return spec;
}

struct FilterSource {
  std::string spec_file;
  std::string preset;

  io::FilterSpec resolve(Index n) const {
    if (!spec_file.empty() && !preset.empty()) {
      throw ParameterError("give either --spec or --preset, not both");
    }
    if (!spec_file.empty()) return io::filter_spec_from_json(io::read_text(spec_file));
    return preset_spec(preset.empty() ? "classical-shift" : preset, n);
  }
};

Signal named_signal(const std::string& name, const Graph& g) {
  const Index n = g.size();
  if (name == "gaussian") return gaussian_signal(n, n / 2, is_circulant(g).has_value());
  if (name == "pulse") return pulse_signal(n, 0);
  if (name == "sine") return sine_signal(n, 2.0);
  if (name == "constant") return Signal::Ones(n);
  throw ParameterError("unknown signal \"" + name + "\" (gaussian|pulse|sine|constant)");
}

json report_json(const PropertyReport& r) { return json::parse(io::report_to_json(r)); }

void print_report(std::ostream& out, const PropertyReport& r) {
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "atomic:               " << yn(r.atomic.holds) << "  (min gap " << r.atomic.witness << ")\n"
      << "norm-preserving:      " << yn(r.norm_preserving.holds) << "  (" << r.norm_preserving.witness << ")\n"
      << "smoothness (sampled): " << yn(r.smoothness_preserving_sampled.holds) << "  ("
      << r.smoothness_preserving_sampled.witness << ")\n"
      << "periodic:             " << yn(r.periodic.holds) << "  (|H^N - I| = "
      << r.periodic_matrix_residual << ")\n"
      << "real-preserving:      " << yn(r.real_preserving.holds) << "  (max |Im H| "
      << r.real_preserving.witness << ")\n";
  if (r.structural_real) {
    out << "conjugate pairing:    " << yn(r.structural_real->holds) << "  ("
        << r.structural_real->witness << ")\n";
  } else {
    out << "conjugate pairing:    not detected\n";
  }
  out << "permutation:          " << yn(r.permutation.holds) << "\n"
      << "normal:               " << yn(r.normal) << "\n";
}

// ---------------------------------------------------------------------------
// Subcommands

struct Options {
  // graph gen
  std::string kind = "ring";
  long long n = 0;
  long long p = 0;
  long long q = 0;
  std::vector<double> c;
  double radius = 0.15;
  std::optional<double> sigma;
  std::optional<double> threshold;
  std::optional<std::uint64_t> seed;
  int attempts = 64;
  std::string output;

  // shared
  std::string graph;
  std::string basis = "auto";
  FilterSource filter;
  std::string report;
  int trials = 16;
  std::uint64_t check_seed = 0;
  double tol = kDefaultTol;
  std::string signal = "gaussian";
  unsigned power = 1;
  std::string target_spec;
  std::string target_preset;

  // comparison
  std::string comparison = "girault";
  std::optional<double> rho;
  double h = 1.0;
  std::vector<double> phi;

  // frames
  std::string window = "gaussian";
  bool no_normalize = false;
  int signals = 20;
  long long column = 0;
  std::string coeffs;
  std::vector<double> thetas;
  std::vector<double> a_real;
  std::vector<double> a_imag;

  // repro
  std::string figure;
  std::string outdir;
  std::optional<long long> repro_n;
  std::optional<unsigned> repro_power;
};

void cmd_graph_gen(const Options& o, std::ostream& out) {
  if (o.n < 2) throw ParameterError("--n must be >= 2");
  const Index n = static_cast<Index>(o.n);
  std::optional<Graph> g;
  if (o.kind == "ring") {
    g = generate(kind::Ring{}, n);
  } else if (o.kind == "path") {
    g = generate(kind::Path{}, n);
  } else if (o.kind == "complete") {
    g = generate(kind::Complete{}, n);
  } else if (o.kind == "bipartite") {
    g = generate(kind::CompleteBipartite{static_cast<Index>(o.p), static_cast<Index>(o.q)}, n);
  } else if (o.kind == "circulant") {
    g = generate(kind::Circulant{Eigen::Map<const RealVector>(o.c.data(), static_cast<Index>(o.c.size()))}, n);
  } else if (o.kind == "sensor") {
    if (!o.seed) throw ParameterError("sensor graphs need --seed");
    SensorParams params{o.radius, o.sigma, o.threshold, o.attempts};
    g = gen_sensor(n, params, *o.seed);
  } else {
    throw ParameterError("unknown graph kind \"" + o.kind + "\"");
  }
  const fs::path path = output_path(o.output);
  write_checked(path, io::graph_to_json(*g), [&](const std::string& s) {
    if (!(io::graph_from_json(s) == *g)) throw ParameterError("graph file did not round-trip");
  });
  out << "wrote " << path.string() << " (" << g->size() << " vertices, " << g->edges().size()
      << " edges)\n";
}

void cmd_graph_info(const Options& o, std::ostream& out) {
  const Graph g = io::graph_from_json(io::read_text(o.graph));
  json j{{"n", g.size()}, {"edges", g.edges().size()}, {"connected", g.is_connected()}};
  const auto d = is_regular(g);
  j["regular_degree"] = d ? json(*d) : json(nullptr);
  if (const auto c = is_circulant(g)) {
    j["circulant"] = std::vector<double>(c->values().data(), c->values().data() + c->size());
  } else {
    j["circulant"] = nullptr;
  }
  if (g.is_connected()) {
    const RealSpectrum s = eigendecompose(g.laplacian());
    const double tol = default_multiplicity_tol(s.eigenvalues);
    const auto groups = multiplicity_partition(s, tol);
    json mult = json::array();
    for (const auto& grp : groups.groups) {
      mult.push_back({{"eigenvalue", grp.eigenvalue}, {"multiplicity", grp.columns.size()}});
    }
    j["eigenvalue_groups"] = mult;
    const auto support = supports_normal_atomic(s, tol);
    j["supports_normal_atomic"] = support.supported;
    j["odd_multiplicity_eigenvalues"] = support.odd_eigenvalues;
  }
  if (!o.output.empty()) write_json(output_path(o.output), j);
  out << j.dump(2) << "\n";
}

void cmd_spectrum_compute(const Options& o, std::ostream& out) {
  const Context ctx = load_context(o.graph, o.basis);
  const fs::path path = output_path(o.output);
  write_checked(path, io::basis_to_json(*ctx.basis),
                [](const std::string& s) { (void)io::basis_from_json(s); });
  out << "wrote " << path.string() << " (" << ctx.basis_kind << " basis, N = " << ctx.basis->size()
      << ", |U*U - I| = " << ctx.basis->unitarity_residual() << ")\n";
}

void cmd_filter_make(const Options& o, std::ostream& out) {
  const Context ctx = load_context(o.graph, o.basis);
  const Filter f = io::realize_filter(o.filter.resolve(ctx.graph.size()), ctx.graph, ctx.spectrum, ctx.basis);
  io::FilterSpec spec;
  spec.kind = io::FilterSpec::Kind::explicit_response;
  spec.response = f.response();
  const fs::path path = output_path(o.output);
  write_checked(path, io::filter_spec_to_json(spec),
                [](const std::string& s) { (void)io::filter_spec_from_json(s); });
  out << "wrote " << path.string() << " (explicit response on the " << ctx.basis_kind << " basis)\n";
}

void cmd_filter_check(const Options& o, std::ostream& out) {
  const Context ctx = load_context(o.graph, o.basis);
  const Filter f = io::realize_filter(o.filter.resolve(ctx.graph.size()), ctx.graph, ctx.spectrum, ctx.basis);
  const PropertyReport r = check_properties(f, ctx.graph.laplacian(), {o.trials, o.check_seed, o.tol});
  out << "basis: " << ctx.basis_kind << "\n";
  print_report(out, r);
  if (!o.report.empty()) {
    const fs::path path = output_path(o.report);
    write_checked(path, io::report_to_json(r), [](const std::string& s) { (void)io::report_from_json(s); });
  }
}

void cmd_filter_apply(const Options& o, std::ostream& out) {
  const Context ctx = load_context(o.graph, o.basis);
  const Filter f = io::realize_filter(o.filter.resolve(ctx.graph.size()), ctx.graph, ctx.spectrum, ctx.basis);
  const Signal x = named_signal(o.signal, ctx.graph);
  const Signal y = apply(f, x, o.power);
  std::ostringstream csv;
  csv.precision(17);
  csv << "vertex,input_re,input_im,output_re,output_im\n";
  for (Index v = 0; v < x.size(); ++v) {
    csv << v << ',' << x(v).real() << ',' << x(v).imag() << ',' << y(v).real() << ',' << y(v).imag() << '\n';
  }
  const fs::path path = output_path(o.output);
  const Index rows = x.size();
  write_checked(path, csv.str(), [rows](const std::string& s) {
    Index lines = 0;
    for (char ch : s) lines += ch == '\n';
    if (lines != rows + 1) throw ParameterError("signal CSV has the wrong number of rows");
  });
  out << "wrote " << path.string() << " (power " << o.power << ", max |Im| = " << max_abs(y.imag()) << ")\n";
}

void cmd_filter_expand(const Options& o, std::ostream& out) {
  const Context ctx = load_context(o.graph, o.basis);
  const Index n = ctx.graph.size();
  const Filter s = io::realize_filter(o.filter.resolve(n), ctx.graph, ctx.spectrum, ctx.basis);
  const FilterSource target{o.target_spec, o.target_preset};
  if (o.target_spec.empty() && o.target_preset.empty()) {
    throw ParameterError("filter expand needs --target or --target-preset");
  }
  const Filter b = io::realize_filter(target.resolve(n), ctx.graph, ctx.spectrum, ctx.basis);
  const PolynomialExpansion e = polynomial_expand(s, b.response(), n <= 64, o.tol);
  json j{{"coefficients", cvec(e.coefficients)},
         {"residual", e.residual},
         {"matrix_residual", e.matrix_residual ? json(*e.matrix_residual) : json(nullptr)},
         {"ill_conditioned", e.ill_conditioned}};
  if (!o.output.empty()) write_json(output_path(o.output), j);
  out << "Vandermonde residual " << e.residual;
  if (e.matrix_residual) out << ", operator residual " << *e.matrix_residual;
  if (e.ill_conditioned) out << " (warning: ill-conditioned)";
  out << "\n";
}

void cmd_filter_compare(const Options& o, std::ostream& out) {
  const Context ctx = load_context(o.graph, o.basis);
  ComparisonKind kind;
  if (o.comparison == "adjacency") {
    kind = shift::Adjacency{};
  } else if (o.comparison == "girault") {
    kind = shift::Girault{o.rho};
  } else if (o.comparison == "gavili") {
    kind = shift::Gavili{o.phi};
  } else if (o.comparison == "schrodinger") {
    kind = shift::Schrodinger{o.h};
  } else if (o.comparison == "sqrt-schrodinger" || o.comparison == "sqrt_schrodinger") {
    kind = shift::SqrtSchrodinger{o.h};
  } else {
    throw ParameterError("unknown comparison \"" + o.comparison + "\"");
  }
  const ComparisonResult r =
      comparison_shift(ctx.graph, ctx.spectrum, ctx.basis, kind, {o.trials, o.check_seed, o.tol});
  out << comparison_name(kind) << ": " << r.diagnostic << "\n";
  json j{{"kind", comparison_name(kind)}, {"is_filter", r.filter.has_value()}, {"diagnostic", r.diagnostic}};
  if (r.filter) {
    j["response"] = cvec(r.filter->response());
    j["report"] = report_json(*r.report);
    print_report(out, *r.report);
  }
  if (!o.report.empty()) write_json(output_path(o.report), j);
}

struct FrameSetup {
  Context ctx;
  FrameDictionary frame;
};

FrameSetup build_frame_setup(const Options& o) {
  Context ctx = load_context(o.graph, o.basis);
  const Index n = ctx.graph.size();
  Signal window;
  if (o.window == "column") {
    if (o.column < 1 || o.column > n) throw ParameterError("--column must lie in 1..N");
    window = ctx.basis->column(static_cast<Index>(o.column - 1));
  } else {
    window = named_signal(o.window, ctx.graph);
  }
  FrequencyResponse a(n);
  for (Index k = 0; k < n; ++k) a(k) = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
  FrameOptions options;
  options.normalize_window = !o.no_normalize;
  FrameDictionary d = build_frame(ctx.basis, window, power_responses(a), options);
  return {std::move(ctx), std::move(d)};
}

void cmd_frame_build(const Options& o, std::ostream& out) {
  const FrameSetup s = build_frame_setup(o);
  const fs::path path = output_path(o.output);
  write_checked(path, io::frame_to_json(s.frame),
                [](const std::string& t) { (void)io::frame_summary_from_json(t); });
  out << "wrote " << path.string() << " (alpha = " << s.frame.lower_bound()
      << ", beta = " << s.frame.upper_bound() << ")\n";
  if (!o.coeffs.empty()) {
    const ComplexMatrix c = analyze(s.frame, named_signal(o.signal, s.ctx.graph));
    write_checked(output_path(o.coeffs), io::coefficients_to_csv(c),
                  [](const std::string& t) { (void)io::coefficients_from_csv(t); });
  }
}

void cmd_frame_roundtrip(const Options& o, std::ostream& out) {
  const FrameSetup s = build_frame_setup(o);
  const Index n = s.ctx.graph.size();
  Rng rng(o.check_seed);
  double max_err = 0.0;
  double max_parseval = 0.0;
  bool inequality = true;
  std::optional<ComplexMatrix> first;
  for (int t = 0; t < o.signals; ++t) {
    const Signal f = rng.complex_normal(n);
    const ComplexMatrix c = analyze(s.frame, f);
    if (!first) first = c;
    const Signal back = synthesize(s.frame, c);
    max_err = std::max(max_err, max_abs(back - f) / std::max(1.0, max_abs(f)));
    const double energy = c.squaredNorm();
    const double weighted = s.frame.weights().dot(f.cwiseAbs2());
    max_parseval = std::max(max_parseval, std::abs(energy - weighted) / weighted);
    const double fn = f.squaredNorm();
    const double eps = 1e-9 * s.frame.upper_bound() * fn;
    inequality = inequality && energy >= s.frame.lower_bound() * fn - eps &&
                 energy <= s.frame.upper_bound() * fn + eps;
  }
  json j{{"n", n},
         {"basis", s.ctx.basis_kind},
         {"window", o.window},
         {"window_normalized", s.frame.window_normalized()},
         {"responses", s.frame.response_count()},
         {"alpha", s.frame.lower_bound()},
         {"beta", s.frame.upper_bound()},
         {"tight", std::abs(s.frame.upper_bound() - s.frame.lower_bound()) <= 1e-10},
         {"signals", o.signals},
         {"seed", o.check_seed},
         {"max_reconstruction_error", max_err},
         {"max_parseval_relative_error", max_parseval},
         {"frame_inequality_holds", inequality}};
  out << "max reconstruction error " << max_err << " over " << o.signals << " signals (alpha = "
      << s.frame.lower_bound() << ", beta = " << s.frame.upper_bound() << ")\n";
  if (!o.report.empty()) write_json(output_path(o.report), j);
  if (!o.coeffs.empty() && first) {
    write_checked(output_path(o.coeffs), io::coefficients_to_csv(*first),
                  [](const std::string& t) { (void)io::coefficients_from_csv(t); });
  }
}

void cmd_frame_lemma(const Options& o, std::ostream& out) {
  FrequencyResponse a;
  if (!o.thetas.empty()) {
    a.resize(static_cast<Index>(o.thetas.size()));
    for (Index k = 0; k < a.size(); ++k) a(k) = std::polar(1.0, o.thetas[static_cast<std::size_t>(k)]);
  } else if (!o.a_real.empty()) {
    if (!o.a_imag.empty() && o.a_imag.size() != o.a_real.size()) {
      throw ParameterError("--a-real and --a-imag lengths differ");
    }
    a.resize(static_cast<Index>(o.a_real.size()));
    for (Index k = 0; k < a.size(); ++k) {
      const auto i = static_cast<std::size_t>(k);
      a(k) = Complex(o.a_real[i], o.a_imag.empty() ? 0.0 : o.a_imag[i]);
    }
  } else {
    throw ParameterError("frame lemma needs --thetas or --a-real/--a-imag");
  }
  const ComplexMatrix pa = power_responses(a);
  const double gram = max_abs(pa.adjoint() * pa - ComplexMatrix::Identity(a.size(), a.size()));
  const auto d = lemma_unitary_decompose(a, o.tol);
  json j{{"n", a.size()}, {"gram_residual", gram}, {"unitary", d.has_value()}};
  if (d) {
    j["permutation"] = d->permutation;
    j["c"] = {d->c.real(), d->c.imag()};
    j["reproduction_error"] = d->reproduction_error;
    out << "power matrix is unitary: A = P U C with c = " << d->c << "\n";
  } else {
    out << "power matrix is not unitary (|A*A - I|_max = " << gram << ")\n";
  }
  if (!o.report.empty()) write_json(output_path(o.report), j);
}

void cmd_repro(const Options& o, std::ostream& out) {
  const auto fig = figure_from_name(o.figure);
  if (!fig) throw ParameterError("unknown figure \"" + o.figure + "\"");
  ReproSpec spec;
  spec.figure = *fig;
  if (o.repro_n) spec.n = static_cast<Index>(*o.repro_n);
  spec.seed = o.seed;
  spec.power = o.repro_power;
  const ReproResult r = run_repro(spec);
  const fs::path dir = output_path(o.outdir.empty() ? std::string(".") : o.outdir);
  for (const auto& p : write_repro(r, dir)) out << "wrote " << p.string() << "\n";
  out << r.summary_json;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Atomic graph filters: spectra, property checks, windowed Fourier frames", "gspshift"};
  app.require_subcommand(1);
  Options o;
  std::function<void()> action;

  const auto add_graph = [&](CLI::App* sub, bool with_basis = true) {
    sub->add_option("--graph", o.graph, "graph JSON file")->required()->check(CLI::ExistingFile);
    if (with_basis) {
      sub->add_option("--basis", o.basis, "auto|real|normal|dft")
          ->check(CLI::IsMember({"auto", "real", "normal", "dft"}));
    }
  };
  const auto add_filter = [&](CLI::App* sub) {
    sub->add_option("--spec", o.filter.spec_file, "filter spec JSON")->check(CLI::ExistingFile);
    sub->add_option("--preset", o.filter.preset, "classical-shift|caption|disordered");
  };
  const auto add_checks = [&](CLI::App* sub) {
    sub->add_option("--trials", o.trials, "random signals for the smoothness check");
    sub->add_option("--seed", o.check_seed, "seed for sampled checks");
    sub->add_option("--tol", o.tol, "verdict tolerance");
  };

  auto* graph = app.add_subcommand("graph", "generate or inspect graphs");
  graph->require_subcommand(1);
  auto* gen = graph->add_subcommand("gen", "generate a graph");
  gen->add_option("--kind", o.kind, "ring|path|complete|bipartite|circulant|sensor")
      ->check(CLI::IsMember({"ring", "path", "complete", "bipartite", "circulant", "sensor"}));
  gen->add_option("--n", o.n, "vertex count")->required();
  gen->add_option("--p", o.p, "bipartite part size p");
  gen->add_option("--q", o.q, "bipartite part size q");
  gen->add_option("--c", o.c, "circulant generating vector")->delimiter(',');
  gen->add_option("--radius", o.radius, "sensor connection radius");
  gen->add_option("--sigma", o.sigma, "sensor kernel width");
  gen->add_option("--threshold", o.threshold, "sensor kernel threshold");
  gen->add_option("--seed", o.seed, "sensor placement seed");
  gen->add_option("--attempts", o.attempts, "sensor connectivity retries");
  gen->add_option("-o,--output", o.output, "output graph JSON")->required();
  gen->callback([&] { action = [&] { cmd_graph_gen(o, out); }; });

  auto* info = graph->add_subcommand("info", "summarize a graph");
  add_graph(info, false);
  info->add_option("-o,--output", o.output, "also write the summary JSON");
  info->callback([&] { action = [&] { cmd_graph_info(o, out); }; });

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectra and Fourier bases");
  spectrum->require_subcommand(1);
  auto* compute = spectrum->add_subcommand("compute", "compute a Fourier basis");
  add_graph(compute);
  compute->add_option("-o,--output", o.output, "output spectrum JSON")->required();
  compute->callback([&] { action = [&] { cmd_spectrum_compute(o, out); }; });

  auto* filter = app.add_subcommand("filter", "atomic filters");
  filter->require_subcommand(1);
  auto* make = filter->add_subcommand("make", "materialize a filter response");
  add_graph(make);
  add_filter(make);
  make->add_option("-o,--output", o.output, "output filter spec JSON")->required();
  make->callback([&] { action = [&] { cmd_filter_make(o, out); }; });

  auto* check = filter->add_subcommand("check", "run the property battery");
  add_graph(check);
  add_filter(check);
  add_checks(check);
  check->add_option("--report", o.report, "property report JSON");
  check->callback([&] { action = [&] { cmd_filter_check(o, out); }; });

  auto* apply_cmd = filter->add_subcommand("apply", "filter a signal");
  add_graph(apply_cmd);
  add_filter(apply_cmd);
  apply_cmd->add_option("--signal", o.signal, "gaussian|pulse|sine|constant");
  apply_cmd->add_option("--power", o.power, "filter power");
  apply_cmd->add_option("-o,--output", o.output, "output CSV")->required();
  apply_cmd->callback([&] { action = [&] { cmd_filter_apply(o, out); }; });

  auto* expand = filter->add_subcommand("expand", "express a target filter as a polynomial");
  add_graph(expand);
  add_filter(expand);
  expand->add_option("--target", o.target_spec, "target filter spec JSON")->check(CLI::ExistingFile);
  expand->add_option("--target-preset", o.target_preset, "target preset");
  expand->add_option("--tol", o.tol, "atomicity tolerance");
  expand->add_option("-o,--output", o.output, "coefficient JSON");
  expand->callback([&] { action = [&] { cmd_filter_expand(o, out); }; });

  auto* compare = filter->add_subcommand("compare", "comparison shift operators");
  add_graph(compare);
  add_checks(compare);
  compare->add_option("--kind", o.comparison, "adjacency|girault|gavili|schrodinger|sqrt-schrodinger")
      ->check(CLI::IsMember({"adjacency", "girault", "gavili", "schrodinger", "sqrt-schrodinger",
                             "sqrt_schrodinger"}));
  compare->add_option("--rho", o.rho, "girault eigenvalue bound");
  compare->add_option("--time", o.h, "semigroup time step h");
  compare->add_option("--phi", o.phi, "gavili phases")->delimiter(',');
  compare->add_option("--report", o.report, "report JSON");
  compare->callback([&] { action = [&] { cmd_filter_compare(o, out); }; });

  auto* frame = app.add_subcommand("frame", "windowed Fourier frames");
  frame->require_subcommand(1);
  auto* fbuild = frame->add_subcommand("build", "build the power-family frame");
  add_graph(fbuild);
  fbuild->add_option("--window", o.window, "gaussian|pulse|sine|constant|column");
  fbuild->add_option("--column", o.column, "basis vector u_K used by --window column (1-based)");
  fbuild->add_flag("--no-normalize", o.no_normalize, "keep the window's norm");
  fbuild->add_option("--signal", o.signal, "signal to analyze when --coeffs is given");
  fbuild->add_option("--coeffs", o.coeffs, "coefficient CSV (j,k,re,im)");
  fbuild->add_option("-o,--output", o.output, "frame JSON")->required();
  fbuild->callback([&] { action = [&] { cmd_frame_build(o, out); }; });

  auto* roundtrip = frame->add_subcommand("roundtrip", "analysis/synthesis round trip");
  add_graph(roundtrip);
  roundtrip->add_option("--window", o.window, "gaussian|pulse|sine|constant|column");
  roundtrip->add_option("--column", o.column, "basis vector u_K used by --window column (1-based)");
  roundtrip->add_flag("--no-normalize", o.no_normalize, "keep the window's norm");
  roundtrip->add_option("--signals", o.signals, "random test signals");
  roundtrip->add_option("--seed", o.check_seed, "seed for the test signals");
  roundtrip->add_option("--coeffs", o.coeffs, "coefficient CSV of the first signal");
  roundtrip->add_option("--report", o.report, "round-trip report JSON");
  roundtrip->callback([&] { action = [&] { cmd_frame_roundtrip(o, out); }; });

  auto* lemma = frame->add_subcommand("lemma", "test whether a power family is unitary");
  lemma->add_option("--thetas", o.thetas, "node phases, a_k = exp(i theta_k)")->delimiter(',');
  lemma->add_option("--a-real", o.a_real, "node real parts")->delimiter(',');
  lemma->add_option("--a-imag", o.a_imag, "node imaginary parts")->delimiter(',');
  lemma->add_option("--tol", o.tol, "tolerance");
  lemma->add_option("--report", o.report, "report JSON");
  lemma->callback([&] { action = [&] { cmd_frame_lemma(o, out); }; });

  auto* repro = app.add_subcommand("repro", "reproduce a figure as CSV + SVG");
  repro->add_option("figure", o.figure, "figure id")->required()->check(CLI::IsMember(figure_names()));
  repro->add_option("--outdir", o.outdir, "output directory");
  repro->add_option("--n", o.repro_n, "vertex count");
  repro->add_option("--seed", o.seed, "sensor seed (fig6)");
  repro->add_option("--power", o.repro_power, "filter power");
  repro->callback([&] { action = [&] { cmd_repro(o, out); }; });

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("gspshift");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gsp::cli
