#pragma once

#include <optional>

#include "gsp/types.hpp"

namespace gsp::cli {

/// exp(-d^2 / (2 width^2)) with d the index distance to `center`
/// (wrapping around when `circular`). width defaults to n / 10.
Signal gaussian_signal(Index n, Index center, bool circular,
                       std::optional<double> width = std::nullopt);

/// exp(-d^2 / (2 width^2)) with d the Euclidean distance between rows of
/// `coordinates` and the row `center`.
Signal gaussian_signal_geometric(const RealMatrix& coordinates, Index center, double width);

/// Unit delta at a 0-based vertex.
Signal pulse_signal(Index n, Index vertex = 0);

/// sin(2 pi cycles n / N), n = 0..N-1.
Signal sine_signal(Index n, double cycles = 2.0);

}  // namespace gsp::cli
