#include "gsp/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "gsp/errors.hpp"

namespace gsp::io {

using nlohmann::json;

namespace {

json parse(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParameterError(std::string(what) + " JSON is missing \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParameterError(std::string(what) + " JSON field \"" + key + "\": " + e.what());
  }
}

// JSON has no infinity; encode non-finite witnesses as null.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_from(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

json vec(const RealVector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

RealVector vec_from(const std::vector<double>& v) {
  return Eigen::Map<const RealVector>(v.data(), static_cast<Index>(v.size()));
}

json rows(const RealMatrix& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(vec(m.row(i).transpose()));
  return out;
}

RealMatrix rows_from(const json& j, Index n_rows, Index n_cols, const char* what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n_rows) {
    throw ParameterError(std::string(what) + " must have " + std::to_string(n_rows) + " rows");
  }
  RealMatrix m(n_rows, n_cols);
  for (Index i = 0; i < n_rows; ++i) {
    const auto row = j[static_cast<std::size_t>(i)].get<std::vector<double>>();
    if (static_cast<Index>(row.size()) != n_cols) {
      throw ParameterError(std::string(what) + " row " + std::to_string(i) + " has wrong length");
    }
    for (Index c = 0; c < n_cols; ++c) m(i, c) = row[static_cast<std::size_t>(c)];
  }
  return m;
}

json verdict(const Verdict& v) { return {{"holds", v.holds}, {"witness", number(v.witness)}}; }

Verdict verdict_from(const json& j) {
  return {j.at("holds").get<bool>(), number_from(j.at("witness"))};
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParameterError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw ParameterError("write failed for " + path.string());
}

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(json::array({e.i, e.j, e.weight}));
  json j{{"n", g.size()}, {"edges", std::move(edges)}};
  return j.dump() + "\n";
}

Graph graph_from_json(std::string_view text) {
  const json j = parse(text, "graph");
  const auto n = field<long long>(j, "n", "graph");
  if (n < 1) throw ParameterError("graph JSON needs n >= 1");
  const json& edges = j.contains("edges") ? j.at("edges") : json::array();
  if (!edges.is_array()) throw ParameterError("graph JSON \"edges\" must be an array");
  RealMatrix w = RealMatrix::Zero(n, n);
  std::set<std::pair<long long, long long>> seen;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number()) {
      throw ParameterError("graph edge must be [i, j, w] with integer indices");
    }
    long long a = e[0].get<long long>();
    long long b = e[1].get<long long>();
    const double weight = e[2].get<double>();
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParameterError("graph edge index out of range: [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    }
    if (a == b) throw ParameterError("graph edge is a self-loop at vertex " + std::to_string(a));
    if (!std::isfinite(weight) || weight <= 0.0) {
      throw ParameterError("graph edge weight must be finite and positive");
    }
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw ParameterError("duplicate graph edge [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    }
    w(a, b) = w(b, a) = weight;
  }
  return Graph(std::move(w));
}

std::string basis_to_json(const FourierBasis& basis) {
  json j{{"n", basis.size()},
         {"eigenvalues", vec(basis.eigenvalues())},
         {"U_real", rows(basis.matrix().real())},
         {"U_imag", rows(basis.matrix().imag())}};
  if (const auto& p = basis.pairing()) {
    j["pairing"] = {{"partner", p->partner},
                    {"c_real", vec(p->scale.real())},
                    {"c_imag", vec(p->scale.imag())}};
  }
  return j.dump() + "\n";
}

FourierBasis basis_from_json(std::string_view text, double unitarity_tol) {
  const json j = parse(text, "spectrum");
  const auto n = field<long long>(j, "n", "spectrum");
  if (n < 1) throw ParameterError("spectrum JSON needs n >= 1");
  const auto lambda = field<std::vector<double>>(j, "eigenvalues", "spectrum");
  if (!lambda.empty() && static_cast<long long>(lambda.size()) != n) {
    throw ParameterError("spectrum eigenvalues must have length n");
  }
  ComplexMatrix u(n, n);
  u.real() = rows_from(j.at("U_real"), n, n, "U_real");
  u.imag() = rows_from(j.at("U_imag"), n, n, "U_imag");

  std::optional<Pairing> pairing;
  if (j.contains("pairing")) {
    const json& p = j.at("pairing");
    Pairing pr;
    pr.partner = field<std::vector<Index>>(p, "partner", "pairing");
    const auto re = field<std::vector<double>>(p, "c_real", "pairing");
    const auto im = field<std::vector<double>>(p, "c_imag", "pairing");
    if (static_cast<long long>(pr.partner.size()) != n || static_cast<long long>(re.size()) != n ||
        static_cast<long long>(im.size()) != n) {
      throw ParameterError("pairing arrays must have length n");
    }
    pr.scale.resize(n);
    for (Index k = 0; k < n; ++k) {
      pr.scale(k) = Complex(re[static_cast<std::size_t>(k)], im[static_cast<std::size_t>(k)]);
    }
    if (!pr.is_involution()) throw ParameterError("pairing is not an involution");
    pairing = std::move(pr);
  }
  FourierBasis basis(std::move(u), vec_from(lambda), std::move(pairing));
  const double residual = basis.unitarity_residual();
  if (!(residual <= unitarity_tol)) {
    throw ParameterError("loaded basis is not unitary: |U*U - I|_max = " + std::to_string(residual));
  }
  return basis;
}

namespace {

json comparison_json(const ComparisonKind& kind) {
  json params = json::object();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, shift::Girault>) {
          if (s.rho) params["rho"] = *s.rho;
        } else if constexpr (std::is_same_v<T, shift::Gavili>) {
          params["phi"] = s.phi;
        } else if constexpr (std::is_same_v<T, shift::Schrodinger> ||
                             std::is_same_v<T, shift::SqrtSchrodinger>) {
          params["h"] = s.h;
        }
      },
      kind);
  return {{"kind", comparison_name(kind)}, {"params", params}};
}

ComparisonKind comparison_from(const json& j) {
  const auto name = field<std::string>(j, "kind", "comparison");
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (name == "adjacency") return shift::Adjacency{};
  if (name == "girault") {
    shift::Girault g;
    if (params.contains("rho")) g.rho = params.at("rho").get<double>();
    return g;
  }
  if (name == "gavili") return shift::Gavili{field<std::vector<double>>(params, "phi", "gavili")};
  if (name == "schrodinger") return shift::Schrodinger{field<double>(params, "h", "schrodinger")};
  if (name == "sqrt_schrodinger") {
    return shift::SqrtSchrodinger{field<double>(params, "h", "sqrt_schrodinger")};
  }
  throw ParameterError("unknown comparison kind \"" + name + "\"");
}

}  // namespace

std::string filter_spec_to_json(const FilterSpec& spec) {
  json j;
  switch (spec.kind) {
    case FilterSpec::Kind::thetas:
      j["kind"] = "thetas";
      j["thetas"] = vec(spec.thetas);
      j["direction"] = spec.direction == ShiftDirection::down ? "down" : "up";
      break;
    case FilterSpec::Kind::explicit_response:
      j["kind"] = "explicit";
      j["a_real"] = vec(spec.response.real());
      j["a_imag"] = vec(spec.response.imag());
      break;
    case FilterSpec::Kind::comparison:
      j["kind"] = "comparison";
      j["comparison"] = comparison_json(spec.comparison);
      break;
  }
  return j.dump() + "\n";
}

FilterSpec filter_spec_from_json(std::string_view text) {
  const json j = parse(text, "filter");
  const auto kind = field<std::string>(j, "kind", "filter");
  FilterSpec spec;
  if (kind == "thetas") {
    spec.kind = FilterSpec::Kind::thetas;
    spec.thetas = vec_from(field<std::vector<double>>(j, "thetas", "filter"));
    const std::string dir = j.contains("direction") ? j.at("direction").get<std::string>() : "down";
    if (dir != "down" && dir != "up") throw ParameterError("filter direction must be down or up");
    spec.direction = dir == "down" ? ShiftDirection::down : ShiftDirection::up;
  } else if (kind == "explicit") {
    spec.kind = FilterSpec::Kind::explicit_response;
    const auto re = field<std::vector<double>>(j, "a_real", "filter");
    const auto im = j.contains("a_imag") ? j.at("a_imag").get<std::vector<double>>()
                                         : std::vector<double>(re.size(), 0.0);
    if (re.size() != im.size()) throw ParameterError("a_real and a_imag lengths differ");
    spec.response.resize(static_cast<Index>(re.size()));
    for (std::size_t k = 0; k < re.size(); ++k) {
      spec.response(static_cast<Index>(k)) = Complex(re[k], im[k]);
    }
  } else if (kind == "comparison") {
    spec.kind = FilterSpec::Kind::comparison;
    spec.comparison = comparison_from(field<json>(j, "comparison", "filter"));
  } else {
    throw ParameterError("unknown filter kind \"" + kind + "\"");
  }
  return spec;
}

Filter realize_filter(const FilterSpec& spec, const Graph& g, const RealSpectrum& spectrum,
                      const BasisPtr& basis) {
  switch (spec.kind) {
    case FilterSpec::Kind::thetas:
      if (spec.thetas.size() != basis->size()) {
        throw ParameterError("theta count does not match the graph");
      }
      return make_from_thetas(basis, spec.thetas, spec.direction).filter;
    case FilterSpec::Kind::explicit_response:
      return make_filter(basis, spec.response);
    case FilterSpec::Kind::comparison: {
      auto result = comparison_shift(g, spectrum, basis, spec.comparison, {0, 0, kDefaultTol});
      if (!result.filter) throw PreconditionError(result.diagnostic);
      return std::move(*result.filter);
    }
  }
  throw ParameterError("unreachable filter kind");
}

std::string report_to_json(const PropertyReport& r) {
  json j{{"tol", r.tol},
         {"atomic", verdict(r.atomic)},
         {"norm_preserving", verdict(r.norm_preserving)},
         {"smoothness_preserving_sampled", verdict(r.smoothness_preserving_sampled)},
         {"smoothness_trials", r.smoothness_trials},
         {"periodic", verdict(r.periodic)},
         {"periodic_matrix_residual", number(r.periodic_matrix_residual)},
         {"real_preserving", verdict(r.real_preserving)},
         {"structural_real", r.structural_real ? verdict(*r.structural_real) : json(nullptr)},
         {"permutation", verdict(r.permutation)},
         {"normal", r.normal}};
  return j.dump(2) + "\n";
}

PropertyReport report_from_json(std::string_view text) {
  const json j = parse(text, "property report");
  try {
    PropertyReport r;
    r.tol = j.at("tol").get<double>();
    r.atomic = verdict_from(j.at("atomic"));
    r.norm_preserving = verdict_from(j.at("norm_preserving"));
    r.smoothness_preserving_sampled = verdict_from(j.at("smoothness_preserving_sampled"));
    r.smoothness_trials = j.at("smoothness_trials").get<int>();
    r.periodic = verdict_from(j.at("periodic"));
    r.periodic_matrix_residual = number_from(j.at("periodic_matrix_residual"));
    r.real_preserving = verdict_from(j.at("real_preserving"));
    if (!j.at("structural_real").is_null()) r.structural_real = verdict_from(j.at("structural_real"));
    r.permutation = verdict_from(j.at("permutation"));
    r.normal = j.at("normal").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed property report: ") + e.what());
  }
}

std::string frame_to_json(const FrameDictionary& d) {
  json j{{"n", d.size()},
         {"responses_count", d.response_count()},
         {"window_normalized", d.window_normalized()},
         {"window_real", vec(d.window().real())},
         {"window_imag", vec(d.window().imag())},
         {"responses_real", rows(d.responses().real())},
         {"responses_imag", rows(d.responses().imag())},
         {"weights", vec(d.weights())},
         {"bounds", {{"alpha", d.lower_bound()}, {"beta", d.upper_bound()}}},
         {"gram_residual", d.gram_residual()}};
  return j.dump() + "\n";
}

FrameSummary frame_summary_from_json(std::string_view text) {
  const json j = parse(text, "frame");
  FrameSummary s;
  s.n = field<Index>(j, "n", "frame");
  s.responses = field<Index>(j, "responses_count", "frame");
  s.weights = vec_from(field<std::vector<double>>(j, "weights", "frame"));
  if (s.weights.size() != s.n) throw ParameterError("frame weights must have length n");
  rows_from(j.at("responses_real"), s.n, s.responses, "responses_real");
  rows_from(j.at("responses_imag"), s.n, s.responses, "responses_imag");
  const json& b = j.at("bounds");
  s.lower_bound = b.at("alpha").get<double>();
  s.upper_bound = b.at("beta").get<double>();
  return s;
}

std::string coefficients_to_csv(const ComplexMatrix& c) {
  std::ostringstream out;
  out.precision(17);
  out << "j,k,re,im\n";
  for (Index j = 0; j < c.rows(); ++j) {
    for (Index k = 0; k < c.cols(); ++k) {
      out << j << ',' << k << ',' << c(j, k).real() << ',' << c(j, k).imag() << '\n';
    }
  }
  return out.str();
}

ComplexMatrix coefficients_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "j,k,re,im") {
    throw ParameterError("coefficient CSV must start with the header j,k,re,im");
  }
  struct Entry {
    long long j, k;
    double re, im;
  };
  std::vector<Entry> entries;
  long long max_j = -1, max_k = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    Entry e{};
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(row >> e.j >> c1 >> e.k >> c2 >> e.re >> c3 >> e.im) || c1 != ',' || c2 != ',' ||
        c3 != ',' || e.j < 0 || e.k < 0) {
      throw ParameterError("malformed coefficient CSV row: " + line);
    }
    max_j = std::max(max_j, e.j);
    max_k = std::max(max_k, e.k);
    entries.push_back(e);
  }
  if (static_cast<long long>(entries.size()) != (max_j + 1) * (max_k + 1)) {
    throw ParameterError("coefficient CSV does not describe a full J x N grid");
  }
  ComplexMatrix out = ComplexMatrix::Zero(max_j + 1, max_k + 1);
  for (const auto& e : entries) out(e.j, e.k) = Complex(e.re, e.im);
  return out;
}

}  // namespace gsp::io
