#include "gsp/comparison.hpp"

#include <cmath>
#include <sstream>

#include "gsp/errors.hpp"

namespace gsp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// eigenvalues can come out as -1e-16; sqrt needs them clamped
double nonneg(double lambda) { return lambda < 0.0 ? 0.0 : lambda; }

}  // namespace

std::string comparison_name(const ComparisonKind& kind) {
  return std::visit(overloaded{
                        [](const shift::Adjacency&) { return std::string("adjacency"); },
                        [](const shift::Girault&) { return std::string("girault"); },
                        [](const shift::Gavili&) { return std::string("gavili"); },
                        [](const shift::Schrodinger&) { return std::string("schrodinger"); },
                        [](const shift::SqrtSchrodinger&) {
                          return std::string("sqrt_schrodinger");
                        },
                    },
                    kind);
}

ComparisonResult comparison_shift(const Graph& g, const RealSpectrum& spec,
                                  const BasisPtr& basis, const ComparisonKind& kind,
                                  const PropertyOptions& options) {
  if (!basis) throw ParameterError("comparison shift needs a basis");
  const Index n = g.size();
  if (spec.size() != n || basis->size() != n) {
    throw ParameterError("graph, spectrum and basis sizes disagree");
  }
  if (!basis->has_eigenvalues()) {
    throw ParameterError("comparison shifts need eigenvalues attached to the basis");
  }
  const RealVector& lambda = basis->eigenvalues();
  FrequencyResponse a(n);
  std::ostringstream diag;

  const bool built = std::visit(
      overloaded{
          [&](const shift::Adjacency&) {
            const auto d = is_regular(g, 1e-12 * std::max(1.0, g.degrees().maxCoeff()));
            if (!d) {
              diag << "adjacency matrix is not a graph filter: the graph is not regular";
              return false;
            }
            for (Index k = 0; k < n; ++k) a(k) = Complex(*d - lambda(k), 0.0);
            diag << "adjacency of a " << *d << "-regular graph, a_k = d - lambda_k";
            return true;
          },
          [&](const shift::Girault& s) {
            const double rho = s.rho.value_or(spec.largest());
            if (!(rho > 0.0)) throw ParameterError("girault rho must be positive");
            for (Index k = 0; k < n; ++k) {
              a(k) = std::polar(1.0, -kPi * std::sqrt(nonneg(lambda(k)) / rho));
            }
            diag << "girault shift with rho = " << rho;
            return true;
          },
          [&](const shift::Gavili& s) {
            if (static_cast<Index>(s.phi.size()) != n) {
              throw ParameterError("gavili phi length does not match the graph");
            }
            for (Index k = 0; k < n; ++k) a(k) = std::polar(1.0, s.phi[static_cast<std::size_t>(k)]);
            diag << "gavili shift";
            return true;
          },
          [&](const shift::Schrodinger& s) {
            for (Index k = 0; k < n; ++k) a(k) = std::polar(1.0, s.h * lambda(k));
            diag << "schrodinger semigroup exp(i h L), h = " << s.h;
            return true;
          },
          [&](const shift::SqrtSchrodinger& s) {
            for (Index k = 0; k < n; ++k) a(k) = std::polar(1.0, s.h * std::sqrt(nonneg(lambda(k))));
            diag << "square-root semigroup exp(i h sqrt(L)), h = " << s.h;
            return true;
          },
      },
      kind);

  ComparisonResult out;
  out.diagnostic = diag.str();
  if (!built) return out;
  out.filter = Filter(basis, std::move(a));
  out.report = check_properties(*out.filter, g.laplacian(), options);
  return out;
}

}  // namespace gsp
