#pragma once

#include <string>
#include <vector>

namespace gsp::cli {

struct Panel {
  std::string title;
  std::vector<double> values;
};

/// Side-by-side stem plots, one panel per series, sharing nothing but height.
std::string stem_plot_svg(const std::string& title, const std::vector<Panel>& panels);

}  // namespace gsp::cli
