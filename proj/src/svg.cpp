#include "knotzeros/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace knotzeros {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<Complex>& points, const SvgOptions& opts,
                       const std::vector<Complex>& marked) {
  double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;
  bool first = !opts.unit_circle;
  auto include = [&](Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return;
    if (first) {
      x0 = x1 = z.real();
      y0 = y1 = z.imag();
      first = false;
      return;
    }
    x0 = std::min(x0, z.real());
    x1 = std::max(x1, z.real());
    y0 = std::min(y0, z.imag());
    y1 = std::max(y1, z.imag());
  };
  for (Complex z : points) include(z);
  for (Complex z : marked) include(z);
  // Square data window centred on the bounding box, then a 5% margin.
  const double half = std::max({x1 - x0, y1 - y0, 1e-9}) / 2.0;
  const double cx = (x0 + x1) / 2.0, cy = (y0 + y1) / 2.0;
  const double span = 2.0 * half * 1.1;
  const double left = cx - span / 2.0, top = cy + span / 2.0;
  const double scale = opts.size / span;
  auto px = [&](double x) { return (x - left) * scale; };
  auto py = [&](double y) { return (top - y) * scale; };

  std::ostringstream out;
  out.precision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size << "\" height=\""
      << opts.size << "\" viewBox=\"0 0 " << opts.size << ' ' << opts.size << "\">\n";
  if (!opts.title.empty()) out << "  <title>" << escape(opts.title) << "</title>\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (left <= 0.0 && left + span >= 0.0) {
    out << "  <line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << opts.size
        << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }
  if (top >= 0.0 && top - span <= 0.0) {
    out << "  <line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << opts.size << "\" y2=\"" << py(0)
        << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }
  if (opts.unit_circle) {
    out << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"" << scale
        << "\" fill=\"none\" stroke=\"#3366cc\" stroke-width=\"1\"/>\n";
  }
  for (Complex z : points) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
    out << "  <circle cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag()) << "\" r=\""
        << opts.marker_radius << "\" fill=\"black\"/>\n";
  }
  const double a = opts.marker_radius * 1.6;
  for (Complex z : marked) {
    const double x = px(z.real()), y = py(z.imag());
    out << "  <path d=\"M" << x - a << ' ' << y - a << " L" << x + a << ' ' << y + a << " M"
        << x - a << ' ' << y + a << " L" << x + a << ' ' << y - a
        << "\" stroke=\"#cc3333\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace knotzeros
