#include "gsp/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gsp::cli {

namespace {

constexpr double kPanelWidth = 320.0;
constexpr double kPanelHeight = 220.0;
constexpr double kMargin = 30.0;
constexpr double kTitleHeight = 30.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string stem_plot_svg(const std::string& title, const std::vector<Panel>& panels) {
  const double width = kPanelWidth * static_cast<double>(std::max<std::size_t>(panels.size(), 1));
  const double height = kPanelHeight + kTitleHeight;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fmt(width / 2) << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << escape(title) << "</text>\n";

  for (std::size_t p = 0; p < panels.size(); ++p) {
    const auto& panel = panels[p];
    const double x0 = kPanelWidth * static_cast<double>(p) + kMargin;
    const double plot_w = kPanelWidth - 2 * kMargin;
    const double y_top = kTitleHeight + kMargin;
    const double plot_h = kPanelHeight - 2 * kMargin;

    double lo = 0.0, hi = 0.0;
    for (double v : panel.values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo < 1e-12) hi = lo + 1.0;
    const auto y_of = [&](double v) { return y_top + plot_h * (hi - v) / (hi - lo); };
    const std::size_t count = panel.values.size();
    const auto x_of = [&](std::size_t i) {
      return count <= 1 ? x0 + plot_w / 2
                        : x0 + plot_w * static_cast<double>(i) / static_cast<double>(count - 1);
    };

    svg << "<g>\n<text x=\"" << fmt(x0 + plot_w / 2) << "\" y=\"" << fmt(y_top - 8)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << escape(panel.title) << "</text>\n";
    svg << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y_of(0.0)) << "\" x2=\""
        << fmt(x0 + plot_w) << "\" y2=\"" << fmt(y_of(0.0)) << "\" stroke=\"#888\"/>\n";
    for (std::size_t i = 0; i < count; ++i) {
      const double x = x_of(i);
      const double y = y_of(panel.values[i]);
      svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y_of(0.0)) << "\" x2=\"" << fmt(x)
          << "\" y2=\"" << fmt(y) << "\" stroke=\"#1f77b4\"/>"
          << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
          << "\" r=\"1.8\" fill=\"#1f77b4\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gsp::cli
