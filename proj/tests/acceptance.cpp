// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gsp/cli/repro.hpp"
#include "gsp/gsp.hpp"
#include "oracle.hpp"

using namespace gsp;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

BasisPtr share(FourierBasis b) { return std::make_shared<const FourierBasis>(std::move(b)); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

FrequencyResponse omega_powers(Index n) {
  FrequencyResponse a(n);
  for (Index k = 0; k < n; ++k) a(k) = std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
  return a;
}

// Permuted grid phases, optionally jittered off the grid, with moduli drawn
// from [0.5, 1.5] when `unit` is false.
FrequencyResponse grid_response(oracle::Gen& gen, Index n, bool on_grid, bool unit) {
  const std::vector<Index> perm = gen.permutation(n);
  FrequencyResponse a(n);
  for (Index k = 0; k < n; ++k) {
    double slot = static_cast<double>(perm[static_cast<std::size_t>(k)]);
    if (!on_grid) slot += gen.uniform(0.05, 0.4) * (gen.uniform() < 0.5 ? 1.0 : -1.0);
    const double r = unit ? 1.0 : gen.uniform(0.5, 1.5);
    a(k) = std::polar(r, -kTwoPi * slot / static_cast<double>(n));
  }
  return a;
}

Outcome classical_shift() {
  const auto t = make_from_thetas(share(dft_basis(16)), uniform_thetas(16));
  const double err = oracle::max_abs(t.filter.matrix() - oracle::shift_columns(16).cast<Complex>());
  return {err <= 1e-10, "max |H_a - S| = " + fmt("%.2e", err) + " (<= 1e-10)"};
}

Outcome closed_form_spectra() {
  const RealSpectrum path = eigendecompose(generate(kind::Path{}, 50).laplacian());
  const double e1 = max_abs(path.eigenvalues - oracle::path_spectrum(50));
  const RealSpectrum bip = eigendecompose(generate(kind::CompleteBipartite{5, 3}, 8).laplacian());
  RealVector listed(8);
  listed << 0, 3, 3, 3, 3, 5, 5, 8;
  const double e2 = max_abs(bip.eigenvalues - listed);
  return {e1 <= 1e-8 && e2 <= 1e-8,
          "path N=50 err " + fmt("%.2e", e1) + ", K(5,3) err " + fmt("%.2e", e2) + " (<= 1e-8)"};
}

Outcome atomic_oracle() {
  oracle::Gen gen(3);
  const Index n = 16;
  const BasisPtr basis = share(real_basis(eigendecompose(generate(kind::Path{}, n).laplacian())));
  int disagreements = 0;
  int atomic_count = 0;
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    FrequencyResponse a = grid_response(gen, n, false, true);
    if (t % 2 == 1) {
      const Index i = gen.below(n);
      Index j = gen.below(n - 1);
      if (j >= i) ++j;
      a(j) = a(i);
    }
    const bool brute = oracle::pairwise_distinct(a, kDefaultTol);
    if (is_atomic(a).atomic != brute) ++disagreements;
    if (!brute) continue;
    ++atomic_count;
    const Filter s = make_filter(basis, a);
    for (int b = 0; b < 10; ++b) {
      const FrequencyResponse target = gen.complex_vector(n);
      const PolynomialExpansion e = polynomial_expand(s, target);
      // Horner in the operator, against H_b built entry by entry
      ComplexMatrix acc = ComplexMatrix::Zero(n, n);
      for (Index k = n; k-- > 0;) acc = acc * s.matrix() + e.coefficients(k) * ComplexMatrix::Identity(n, n);
      const double r = oracle::max_abs(acc - oracle::filter_matrix(basis->matrix(), target));
      worst = std::max({worst, r, e.matrix_residual.value_or(INFINITY)});
    }
  }
  return {disagreements == 0 && atomic_count == 25 && worst <= 1e-7,
          std::to_string(disagreements) + " disagreements over 50 responses, " + std::to_string(atomic_count) +
              " atomic; worst |sum c_k H_a^k - H_b| = " + fmt("%.2e", worst) + " (<= 1e-7)"};
}

Outcome norm_battery() {
  oracle::Gen gen(4);
  struct Config {
    Graph graph;
    BasisPtr basis;
  };
  std::vector<Config> configs;
  const auto add_real = [&](Graph g) {
    BasisPtr b = share(real_basis(eigendecompose(g.laplacian())));
    configs.push_back({std::move(g), std::move(b)});
  };
  const auto add_normal = [&](Graph g) {
    const RealSpectrum s = eigendecompose(g.laplacian());
    BasisPtr b = share(normal_basis(s, default_multiplicity_tol(s.eigenvalues)));
    configs.push_back({std::move(g), std::move(b)});
  };
  configs.push_back({generate(kind::Ring{}, 12), share(attach_eigenvalues(dft_basis(12), generate(kind::Ring{}, 12).laplacian()))});
  add_real(generate(kind::Path{}, 10));
  add_normal(generate(kind::CompleteBipartite{5, 3}, 8));
  add_normal(generate(kind::Complete{}, 7));
  add_real(gen_sensor(40, SensorParams{0.35}, 11));

  int norm_mismatch = 0, smooth_fail = 0, period_mismatch = 0, periodic_cases = 0, unit_cases = 0;
  for (int t = 0; t < 100; ++t) {
    const Config& c = configs[static_cast<std::size_t>(t) % configs.size()];
    const Index n = c.basis->size();
    const bool unit = (t / 5) % 2 == 0;
    const bool on_grid = (t / 10) % 2 == 0;
    const Filter f = make_filter(c.basis, grid_response(gen, n, on_grid, unit));
    const PropertyReport r = check_properties(f, c.graph.laplacian(), {20, static_cast<std::uint64_t>(t), 1e-9});
    unit_cases += r.norm_preserving.holds;
    periodic_cases += r.periodic.holds;

    double dev = 0.0;
    for (int s = 0; s < 20; ++s) {
      const Signal x = gen.complex_vector(n);
      dev = std::max(dev, std::abs((f.matrix() * x).norm() - x.norm()) / x.norm());
    }
    if (r.norm_preserving.holds != (dev <= 1e-9)) ++norm_mismatch;
    if (r.norm_preserving.holds && r.smoothness_preserving_sampled.witness > 1e-9) ++smooth_fail;
    if ((r.periodic_matrix_residual <= 1e-8) != r.periodic.holds) ++period_mismatch;
  }
  const bool pass = norm_mismatch == 0 && smooth_fail == 0 && period_mismatch == 0;
  return {pass, "100 configs (" + std::to_string(unit_cases) + " unit, " + std::to_string(periodic_cases) +
                    " periodic): norm mismatches " + std::to_string(norm_mismatch) + ", smoothness failures " +
                    std::to_string(smooth_fail) + ", periodicity mismatches " + std::to_string(period_mismatch)};
}

Outcome real_preservation() {
  const Index n = 12;
  const Graph ring = generate(kind::Ring{}, n);
  const BasisPtr dft = share(dft_basis(n));
  const FrequencyResponse a = omega_powers(n);
  const PropertyReport ra = check_properties(make_filter(dft, a), ring.laplacian());
  FrequencyResponse b = a;
  std::swap(b(2), b(5));
  const PropertyReport rb = check_properties(make_filter(dft, b), ring.laplacian());
  const bool conforming = ra.real_preserving.witness <= 1e-10 && ra.structural_real && ra.structural_real->holds;
  const bool flipped = !rb.real_preserving.holds && rb.structural_real && !rb.structural_real->holds;

  oracle::Gen gen(5);
  int path_real = 0, path_total = 0;
  for (Index m = 3; m <= 12; ++m) {
    const Graph g = generate(kind::Path{}, m);
    const BasisPtr basis = share(real_basis(eigendecompose(g.laplacian())));
    for (int t = 0; t < 10; ++t) {
      const PropertyReport r = check_properties(make_filter(basis, grid_response(gen, m, t % 2 == 0, true)),
                                                g.laplacian(), {0, 0, 1e-9});
      if (!r.atomic.holds || !r.norm_preserving.holds) continue;
      ++path_total;
      path_real += r.real_preserving.holds;
    }
  }
  return {conforming && flipped && path_real == 0 && path_total == 100,
          "dft(12) conforming max|Im H| = " + fmt("%.2e", ra.real_preserving.witness) + ", disordered " +
              fmt("%.2e", rb.real_preserving.witness) + "; path real-preserving " + std::to_string(path_real) + "/" +
              std::to_string(path_total)};
}

Outcome normal_parity() {
  struct Case {
    GraphKind kind;
    Index n;
    bool expected;
  };
  const std::vector<Case> cases = {{kind::Ring{}, 8, true},          {kind::Ring{}, 9, true},
                                   {kind::Complete{}, 6, true},      {kind::Complete{}, 7, true},
                                   {kind::CompleteBipartite{5, 3}, 8, true}, {kind::Path{}, 3, false},
                                   {kind::Path{}, 10, false},        {kind::CompleteBipartite{5, 4}, 9, false}};
  int wrong = 0;
  double pair_err = 0.0, unit_err = 0.0;
  for (const auto& c : cases) {
    const RealSpectrum s = eigendecompose(generate(c.kind, c.n).laplacian());
    const double tol = default_multiplicity_tol(s.eigenvalues);
    const bool got = supports_normal_atomic(s, tol).supported;
    if (got != c.expected) ++wrong;
    if (!got) continue;
    const FourierBasis b = normal_basis(s, tol);
    const ComplexMatrix& u = b.matrix();
    for (Index k = 1; k <= c.n / 2; ++k) pair_err = std::max(pair_err, oracle::max_abs(u.col(k) - u.col(c.n - k).conjugate()));
    unit_err = std::max(unit_err, oracle::max_abs(u.adjoint() * u - ComplexMatrix::Identity(c.n, c.n)));
  }
  return {wrong == 0 && pair_err <= 1e-10 && unit_err <= 1e-10,
          std::to_string(wrong) + " parity errors; pairing err " + fmt("%.2e", pair_err) + ", |U*U - I| " +
              fmt("%.2e", unit_err) + " (<= 1e-10)"};
}

Outcome frame_reconstruction() {
  oracle::Gen gen(6);
  const Index n = 32;
  Signal g(n);
  for (Index v = 0; v < n; ++v) {
    const double d = std::abs(static_cast<double>(v - n / 2));
    g(v) = std::exp(-d * d / (2.0 * 3.2 * 3.2));
  }
  FrameOptions raw;
  raw.normalize_window = false;
  const FrameDictionary ring = build_frame(share(dft_basis(n)), g, power_responses(omega_powers(n)), raw);
  const double tight = std::abs(ring.upper_bound() - ring.lower_bound());
  const double alpha_err = std::abs(ring.lower_bound() - g.squaredNorm() / static_cast<double>(n));
  double ring_err = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Signal f = gen.complex_vector(n);
    ring_err = std::max(ring_err, oracle::max_abs(synthesize(ring, analyze(ring, f)) - f));
  }

  const RealSpectrum s = eigendecompose(generate(kind::CompleteBipartite{5, 3}, 8).laplacian());
  const BasisPtr nb = share(normal_basis(s, default_multiplicity_tol(s.eigenvalues)));
  const FrameDictionary bip = build_frame(nb, gen.complex_vector(8), power_responses(omega_powers(8)));
  double bip_err = 0.0;
  bool inequality = true;
  for (int t = 0; t < 20; ++t) {
    const Signal f = gen.complex_vector(8);
    const ComplexMatrix c = analyze(bip, f);
    bip_err = std::max(bip_err, oracle::max_abs(synthesize(bip, c) - f));
    const double e = c.squaredNorm(), fn = f.squaredNorm();
    inequality = inequality && e >= bip.lower_bound() * fn * (1.0 - 1e-9) && e <= bip.upper_bound() * fn * (1.0 + 1e-9);
  }
  return {tight <= 1e-10 && alpha_err <= 1e-10 && ring_err <= 1e-9 && bip_err <= 1e-9 && inequality,
          "ring |beta - alpha| = " + fmt("%.2e", tight) + ", alpha err " + fmt("%.2e", alpha_err) + ", round trip " +
              fmt("%.2e", ring_err) + "; K(5,3) round trip " + fmt("%.2e", bip_err) +
              (inequality ? ", frame inequality holds" : ", frame inequality violated")};
}

Outcome unitary_decomposition() {
  oracle::Gen gen(7);
  int recovered = 0;
  double worst_repro = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Index n = 2 + gen.below(15);
    const std::vector<Index> perm = gen.permutation(n);
    // phase of c below 2 pi / N so that c itself is the smallest-phase node
    const Complex c = std::polar(1.0, gen.uniform(0.01, kTwoPi / static_cast<double>(n) - 0.01));
    FrequencyResponse a(n);
    for (Index k = 0; k < n; ++k) a(k) = c * std::polar(1.0, kTwoPi * static_cast<double>(perm[static_cast<std::size_t>(k)]) / static_cast<double>(n));
    const auto d = lemma_unitary_decompose(a);
    if (!d) continue;
    worst_repro = std::max(worst_repro, d->reproduction_error);
    if (d->permutation == perm && std::abs(d->c - c) <= 1e-10 && d->reproduction_error <= 1e-10) ++recovered;
  }
  int rejected = 0;
  double min_gram = INFINITY;
  for (int t = 0; t < 20; ++t) {
    const Index n = 3 + gen.below(14);
    FrequencyResponse a(n);
    for (Index k = 0; k < n; ++k) a(k) = std::polar(1.0, gen.uniform(0.0, kTwoPi));
    const ComplexMatrix pa = power_responses(a);
    const double gram = oracle::max_abs(pa.adjoint() * pa - ComplexMatrix::Identity(n, n));
    min_gram = std::min(min_gram, gram);
    if (!lemma_unitary_decompose(a) && gram > 1e-6) ++rejected;
  }
  return {recovered == 20 && rejected == 20,
          std::to_string(recovered) + "/20 recovered (worst reproduction " + fmt("%.2e", worst_repro) + "), " +
              std::to_string(rejected) + "/20 non-DFT rejected (min Gram residual " + fmt("%.2e", min_gram) + ")"};
}

Outcome figures() {
  cli::ReproSpec fig5{cli::Figure::fig5_path_sine, 64, std::nullopt, std::nullopt};
  cli::ReproSpec fig6{cli::Figure::fig6_sensor_gaussian, 500, 42, std::nullopt};
  cli::ReproSpec fig1{cli::Figure::fig1_ring_gaussian, std::nullopt, std::nullopt, std::nullopt};
  const auto r5 = cli::run_repro(fig5);
  const auto r6 = cli::run_repro(fig6);
  const auto r1 = cli::run_repro(fig1);
  return {r5.imag_energy_fraction > 1e-4 && r6.imag_energy_fraction > 1e-4 && r1.max_imag <= 1e-9,
          "imaginary energy fraction fig5 " + fmt("%.3e", r5.imag_energy_fraction) + ", fig6 " +
              fmt("%.3e", r6.imag_energy_fraction) + " (> 1e-4); fig1 max |Im| " + fmt("%.2e", r1.max_imag) +
              " (<= 1e-9)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"classical-shift degeneration", classical_shift},
      {"closed-form spectra", closed_form_spectra},
      {"atomicity oracle and polynomial expansion", atomic_oracle},
      {"norm, smoothness and periodicity battery", norm_battery},
      {"real-preservation equivalence", real_preservation},
      {"normal-basis parity", normal_parity},
      {"frame reconstruction", frame_reconstruction},
      {"power-matrix unitarity decomposition", unitary_decomposition},
      {"figure-level qualitative claims", figures},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s | %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    failures += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
