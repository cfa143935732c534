#ifndef NETC_SVG_PLOT_HPP
#define NETC_SVG_PLOT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace netc {

struct ScatterSeries {
  std::string name;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

// Minimal self-contained SVG scatter plot; no external dependency.
void write_svg_scatter(std::ostream &out, const std::string &title,
                       const std::string &x_label, const std::string &y_label,
                       const std::vector<ScatterSeries> &series);

} // namespace netc

#endif
