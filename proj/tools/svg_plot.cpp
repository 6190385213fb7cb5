#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace fermat::cli {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 190;
constexpr double kTop = 30;
constexpr double kBottom = 60;

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct Range {
  double lo;
  double hi;
  double map(double v, double a, double b) const {
    return hi > lo ? a + (v - lo) / (hi - lo) * (b - a) : (a + b) / 2;
  }
};

}  // namespace

std::string render_svg(const CountSeries& series) {
  double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
  for (Int b : series.bounds) {
    xlo = std::min(xlo, std::log10(double(b)));
    xhi = std::max(xhi, std::log10(double(b)));
  }
  for (const auto& row : series.counts) {
    for (auto v : row) {
      if (v == 0) continue;
      ylo = std::min(ylo, std::log10(double(v)));
      yhi = std::max(yhi, std::log10(double(v)));
    }
  }
  if (ylo > yhi) ylo = yhi = 0;
  const Range xr{std::floor(xlo), std::max(std::ceil(xhi), std::floor(xlo) + 1)};
  const Range yr{std::floor(ylo), std::max(std::ceil(yhi), std::floor(ylo) + 1)};
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes and decade ticks.
  os << "<g stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0 << "\"/>\n"
     << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1 << "\"/>\n"
     << "</g>\n";
  for (double e = xr.lo; e <= xr.hi + 1e-9; e += 1) {
    const double px = xr.map(e, x0, x1);
    os << "<line x1=\"" << px << "\" y1=\"" << y0 << "\" x2=\"" << px << "\" y2=\"" << y0 + 5
       << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << px << "\" y=\"" << y0 + 20 << "\" text-anchor=\"middle\">1e" << int(e)
       << "</text>\n";
  }
  for (double e = yr.lo; e <= yr.hi + 1e-9; e += 1) {
    const double py = yr.map(e, y0, y1);
    os << "<line x1=\"" << x0 - 5 << "\" y1=\"" << py << "\" x2=\"" << x0 << "\" y2=\"" << py
       << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << x0 - 8 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">1e" << int(e)
       << "</text>\n";
  }
  os << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 15
     << "\" text-anchor=\"middle\">height bound B</text>\n"
     << "<text x=\"18\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << (y0 + y1) / 2 << ")\">N(B)</text>\n";

  for (std::size_t c = 0; c < kCountClasses.size(); ++c) {
    const auto& row = series.counts[c];
    std::ostringstream pts;
    pts << std::fixed << std::setprecision(2);
    for (std::size_t i = 0; i < series.bounds.size() && i < row.size(); ++i) {
      if (row[i] == 0) continue;
      pts << xr.map(std::log10(double(series.bounds[i])), x0, x1) << ","
          << yr.map(std::log10(double(row[i])), y0, y1) << " ";
    }
    os << "<polyline fill=\"none\" stroke=\"" << kColors[c] << "\" stroke-width=\"2\" points=\""
       << pts.str() << "\"/>\n";
    const double ly = kTop + 20.0 * double(c);
    os << "<line x1=\"" << x1 + 15 << "\" y1=\"" << ly << "\" x2=\"" << x1 + 40 << "\" y2=\"" << ly
       << "\" stroke=\"" << kColors[c] << "\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << x1 + 46 << "\" y=\"" << ly + 4 << "\">" << label(kCountClasses[c])
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fermat::cli
