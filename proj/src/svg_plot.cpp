#include "netc/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace netc {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// A "nice" tick step close to range/5.
double nice_step(double range) {
  if (!(range > 0.0)) return 1.0;
  double raw = range / 5.0;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double frac = raw / mag;
  double step = frac < 1.5 ? 1.0 : frac < 3.5 ? 2.0 : frac < 7.5 ? 5.0 : 10.0;
  return step * mag;
}

} // namespace

void write_svg_scatter(std::ostream &out, const std::string &title,
                       const std::string &x_label, const std::string &y_label,
                       const std::vector<ScatterSeries> &series) {
  const double width = 720, height = 480;
  const double ml = 70, mr = 20, mt = 40, mb = 50;

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const auto &s : series)
    for (const auto &[x, y] : s.points) {
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;

  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
  auto py = [&](double y) { return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

  // Axes.
  out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
      << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << height - mb << "\" stroke=\"black\"/>\n";

  double xs = nice_step(xmax - xmin);
  for (double x = std::ceil(xmin / xs) * xs; x <= xmax + 1e-9; x += xs) {
    out << "<line x1=\"" << px(x) << "\" y1=\"" << height - mb << "\" x2=\"" << px(x)
        << "\" y2=\"" << height - mb + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << px(x) << "\" y=\"" << height - mb + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt(x) << "</text>\n";
  }
  double ys = nice_step(ymax - ymin);
  for (double y = std::ceil(ymin / ys) * ys; y <= ymax + 1e-9; y += ys) {
    out << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(y) << "\" x2=\"" << ml
        << "\" y2=\"" << py(y) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << ml - 8 << "\" y=\"" << py(y) + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt(y) << "</text>\n";
  }
  out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 10
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << x_label << "</text>\n"
      << "<text x=\"18\" y=\"" << (mt + height - mb) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " << (mt + height - mb) / 2 << ")\">"
      << y_label << "</text>\n";

  double ly = mt + 8;
  for (const auto &s : series) {
    for (const auto &[x, y] : s.points)
      out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
          << "\" r=\"3\" fill=\"" << s.color << "\" fill-opacity=\"0.7\"/>\n";
    out << "<circle cx=\"" << width - mr - 150 << "\" cy=\"" << ly
        << "\" r=\"4\" fill=\"" << s.color << "\"/>\n"
        << "<text x=\"" << width - mr - 140 << "\" y=\"" << ly + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.name << "</text>\n";
    ly += 18;
  }
  out << "</svg>\n";
}

} // namespace netc
