#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "gsp/cli/commands.hpp"
#include "gsp/cli/repro.hpp"
#include "gsp/cli/signals.hpp"
#include "gsp/gsp.hpp"

namespace fs = std::filesystem;
using namespace gsp;
using nlohmann::json;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gsp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    setenv("GSP_OUTPUT_DIR", dir_.c_str(), 1);
  }
  void TearDown() override {
    unsetenv("GSP_OUTPUT_DIR");
    fs::remove_all(dir_);
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string slurp(const std::string& name) const { return io::read_text(dir_ / name); }
  json load(const std::string& name) const { return json::parse(slurp(name)); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

}  // namespace

TEST_F(Cli, GraphGenWritesValidJson) {
  ASSERT_EQ(run({"graph", "gen", "--kind", "ring", "--n", "16", "-o", "ring.json"}), 0) << err_.str();
  EXPECT_TRUE(io::graph_from_json(slurp("ring.json")) == generate(kind::Ring{}, 16));
  ASSERT_EQ(run({"graph", "gen", "--kind", "bipartite", "--n", "8", "--p", "5", "--q", "3", "-o", "b.json"}), 0);
  ASSERT_EQ(run({"graph", "gen", "--kind", "circulant", "--n", "6", "--c", "0,1,2,0,2,1", "-o", "c.json"}), 0);
  EXPECT_TRUE(is_circulant(io::graph_from_json(slurp("c.json"))).has_value());
}

TEST_F(Cli, PathReportIsNotRealPreserving) {
  ASSERT_EQ(run({"graph", "gen", "--kind", "path", "--n", "10", "-o", "path.json"}), 0);
  ASSERT_EQ(run({"filter", "check", "--graph", path("path.json"), "--preset", "classical-shift", "--report", "r.json"}), 0)
      << err_.str();
  const PropertyReport r = io::report_from_json(slurp("r.json"));
  EXPECT_FALSE(r.real_preserving.holds);
  EXPECT_TRUE(r.norm_preserving.holds);
  EXPECT_TRUE(r.periodic.holds);
}

TEST_F(Cli, FrameRoundtripReport) {
  ASSERT_EQ(run({"graph", "gen", "--kind", "ring", "--n", "16", "-o", "ring.json"}), 0);
  ASSERT_EQ(run({"frame", "roundtrip", "--graph", path("ring.json"), "--window", "gaussian", "--report", "fr.json",
                 "--coeffs", "c.csv"}),
            0)
      << err_.str();
  const json j = load("fr.json");
  EXPECT_LE(j.at("max_reconstruction_error").get<double>(), 1e-9);
  EXPECT_TRUE(j.at("tight").get<bool>());
  EXPECT_TRUE(j.at("frame_inequality_holds").get<bool>());
  const ComplexMatrix c = io::coefficients_from_csv(slurp("c.csv"));
  EXPECT_EQ(c.rows(), 16);
  EXPECT_EQ(c.cols(), 16);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({"bogus"}), 1);
  EXPECT_EQ(run({"graph", "gen", "--kind", "ring"}), 1);
  EXPECT_EQ(run({"graph", "gen", "--kind", "ring", "--n", "1", "-o", "x.json"}), 1);
  EXPECT_EQ(run({"--help"}), 0);
  EXPECT_NE(out_.str().find("Usage"), std::string::npos);

  ASSERT_EQ(run({"graph", "gen", "--kind", "path", "--n", "4", "-o", "p4.json"}), 0);
  EXPECT_EQ(run({"spectrum", "compute", "--graph", path("p4.json"), "--basis", "normal", "-o", "s.json"}), 2);
  EXPECT_FALSE(err_.str().empty());

  ASSERT_EQ(run({"graph", "gen", "--kind", "path", "--n", "3", "-o", "p3.json"}), 0);
  EXPECT_EQ(run({"frame", "build", "--graph", path("p3.json"), "--window", "constant", "-o", "f.json"}), 0);
  EXPECT_EQ(run({"frame", "lemma", "--thetas", "0,1,2"}), 0);
  EXPECT_EQ(run({"repro", "fig6_sensor_gaussian", "--outdir", "out"}), 1);
  EXPECT_EQ(run({"repro", "fig9"}), 1);
  EXPECT_EQ(run({"filter", "check", "--graph", path("p3.json"), "--preset", "nonsense"}), 1);
}

TEST_F(Cli, DegenerateWindowExitsTwo) {
  // u_2 of the 3-vertex path vanishes at its middle vertex
  ASSERT_EQ(run({"graph", "gen", "--kind", "path", "--n", "3", "-o", "p3.json"}), 0);
  EXPECT_EQ(run({"frame", "build", "--graph", path("p3.json"), "--window", "column", "--column", "2", "-o", "f.json"}),
            2);
  EXPECT_NE(err_.str().find("vertex 2"), std::string::npos) << err_.str();
  EXPECT_EQ(run({"frame", "build", "--graph", path("p3.json"), "--window", "column", "--column", "4", "-o", "f.json"}),
            1);
}

TEST_F(Cli, SpectrumAndFilterArtifactsReload) {
  ASSERT_EQ(run({"graph", "gen", "--kind", "bipartite", "--n", "8", "--p", "5", "--q", "3", "-o", "b.json"}), 0);
  ASSERT_EQ(run({"spectrum", "compute", "--graph", path("b.json"), "-o", "s.json"}), 0);
  const FourierBasis basis = io::basis_from_json(slurp("s.json"));
  EXPECT_TRUE(basis.pairing().has_value());

  ASSERT_EQ(run({"filter", "make", "--graph", path("b.json"), "--preset", "caption", "-o", "f.json"}), 0);
  const io::FilterSpec spec = io::filter_spec_from_json(slurp("f.json"));
  EXPECT_EQ(spec.kind, io::FilterSpec::Kind::explicit_response);

  ASSERT_EQ(run({"filter", "check", "--graph", path("b.json"), "--spec", path("f.json"), "--report", "r.json"}), 0);
  EXPECT_TRUE(io::report_from_json(slurp("r.json")).normal);

  ASSERT_EQ(run({"filter", "apply", "--graph", path("b.json"), "--preset", "caption", "--signal", "pulse", "--power",
                 "3", "-o", "y.csv"}),
            0);
  EXPECT_EQ(slurp("y.csv").rfind("vertex,", 0), 0u);

  ASSERT_EQ(run({"filter", "expand", "--graph", path("b.json"), "--preset", "caption", "--target-preset",
                 "classical-shift", "-o", "e.json"}),
            0)
      << err_.str();
  EXPECT_LE(load("e.json").at("matrix_residual").get<double>(), 1e-7);
}

TEST_F(Cli, CompareDiagnosticsAndFilters) {
  ASSERT_EQ(run({"graph", "gen", "--kind", "path", "--n", "5", "-o", "p.json"}), 0);
  ASSERT_EQ(run({"filter", "compare", "--graph", path("p.json"), "--kind", "adjacency", "--report", "a.json"}), 0);
  EXPECT_FALSE(load("a.json").at("is_filter").get<bool>());

  ASSERT_EQ(run({"graph", "gen", "--kind", "ring", "--n", "4", "-o", "r.json"}), 0);
  ASSERT_EQ(run({"filter", "compare", "--graph", path("r.json"), "--basis", "real", "--kind", "girault", "--rho", "4",
                 "--report", "g.json"}),
            0);
  const json g = load("g.json");
  EXPECT_TRUE(g.at("is_filter").get<bool>());
  EXPECT_FALSE(g.at("report").at("atomic").at("holds").get<bool>());

  ASSERT_EQ(run({"filter", "compare", "--graph", path("r.json"), "--kind", "schrodinger", "--time", "0"}), 0);
}

TEST_F(Cli, FrameLemmaReport) {
  ASSERT_EQ(run({"frame", "lemma", "--a-real", "0,1,0,-1", "--a-imag", "-1,0,1,0", "--report", "l.json"}), 0);
  const json j = load("l.json");
  EXPECT_TRUE(j.at("unitary").get<bool>());
  EXPECT_EQ(j.at("permutation").get<std::vector<Index>>(), (std::vector<Index>{3, 0, 1, 2}));
}

TEST_F(Cli, ByteDeterminism) {
  for (const std::string tag : {"a", "b"}) {
    ASSERT_EQ(run({"graph", "gen", "--kind", "sensor", "--n", "80", "--seed", "5", "--radius", "0.3", "-o",
                   "s" + tag + ".json"}),
              0);
    ASSERT_EQ(run({"repro", "fig1_ring_gaussian", "--outdir", "out" + tag}), 0);
    ASSERT_EQ(run({"filter", "check", "--graph", path("s" + tag + ".json"), "--preset", "caption", "--seed", "3",
                   "--report", "r" + tag + ".json"}),
              0);
  }
  EXPECT_EQ(slurp("sa.json"), slurp("sb.json"));
  EXPECT_EQ(slurp("ra.json"), slurp("rb.json"));
  for (const std::string ext : {".csv", ".svg", ".json"}) {
    EXPECT_EQ(slurp("outa/fig1_ring_gaussian" + ext), slurp("outb/fig1_ring_gaussian" + ext));
  }
}

TEST_F(Cli, ReproWritesAllArtifacts) {
  for (const auto& name : cli::figure_names()) {
    std::vector<std::string> args{"repro", name, "--outdir", "figs"};
    if (name == "fig6_sensor_gaussian") {
      args.insert(args.end(), {"--seed", "7", "--n", "200"});
    }
    ASSERT_EQ(run(args), 0) << name << ": " << err_.str();
    const std::string csv = slurp("figs/" + name + ".csv");
    EXPECT_EQ(csv.rfind("# response", 0), 0u);
    EXPECT_NE(slurp("figs/" + name + ".svg").find("</svg>"), std::string::npos);
    EXPECT_NO_THROW((void)load("figs/" + name + ".json"));
  }
}

TEST(Repro, CompletePulseMatchesApply) {
  cli::ReproSpec spec;
  spec.figure = cli::Figure::fig3_complete_pulse;
  const cli::ReproResult r = cli::run_repro(spec);
  ASSERT_EQ(r.outputs.size(), 2u);
  const Index n = r.n;
  const Graph g = generate(kind::Complete{}, n);
  const auto basis = std::make_shared<const FourierBasis>(attach_eigenvalues(dft_basis(n), g.laplacian()));
  const Filter f = make_from_thetas(basis, uniform_thetas(n), ShiftDirection::up).filter;
  Signal pulse = Signal::Zero(n);
  pulse(0) = 1.0;
  EXPECT_LE(max_abs(r.outputs[0] - apply(f, pulse, 1)), 1e-12);
  EXPECT_LE(max_abs(r.outputs[1] - apply(f, pulse, 3)), 1e-12);
  // the caption response is the upshift on the DFT basis
  Signal up = Signal::Zero(n);
  up(n - 3) = 1.0;
  EXPECT_LE(max_abs(r.outputs[1] - up), 1e-12);
}

TEST(Repro, QualitativeClaims) {
  cli::ReproSpec fig1;
  fig1.figure = cli::Figure::fig1_ring_gaussian;
  const auto r1 = cli::run_repro(fig1);
  EXPECT_LE(r1.max_imag, 1e-9);
  ASSERT_TRUE(r1.max_imag_disordered);
  EXPECT_GT(*r1.max_imag_disordered, 1e-3);

  cli::ReproSpec fig5;
  fig5.figure = cli::Figure::fig5_path_sine;
  EXPECT_GT(cli::run_repro(fig5).imag_energy_fraction, 1e-4);

  cli::ReproSpec fig4;
  fig4.figure = cli::Figure::fig4_bipartite_pulse;
  EXPECT_LE(cli::run_repro(fig4).max_imag, 1e-9);
  fig4.n = 9;
  EXPECT_THROW(cli::run_repro(fig4), ParameterError);
}

TEST(Signals, Defaults) {
  const Signal g = cli::gaussian_signal(20, 10, false);
  EXPECT_NEAR(g(10).real(), 1.0, 1e-15);
  EXPECT_NEAR(g(12).real(), std::exp(-4.0 / 8.0), 1e-15);
  const Signal ring = cli::gaussian_signal(20, 1, true);
  EXPECT_NEAR(ring(19).real(), ring(3).real(), 1e-15);
  const Signal p = cli::pulse_signal(5);
  EXPECT_EQ(p(0), Complex(1.0, 0.0));
  EXPECT_EQ(p.squaredNorm(), 1.0);
  const Signal s = cli::sine_signal(8, 2.0);
  EXPECT_NEAR(s(1).real(), 1.0, 1e-15);
  EXPECT_NEAR(s(2).real(), 0.0, 1e-15);
}
