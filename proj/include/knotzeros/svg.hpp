#pragma once

#include <string>
#include <vector>

#include "knotzeros/polynomial.hpp"

namespace knotzeros {

struct SvgOptions {
  std::string title;
  bool unit_circle = false;
  double marker_radius = 2.5;
  int size = 640;
};

/// Self-contained scatter plot of complex points with inline styling and
/// no scripts. The viewport fits the points (and the unit circle when
/// drawn) with a 5% margin; `marked` points are drawn as crosses.
std::string render_svg(const std::vector<Complex>& points, const SvgOptions& opts,
                       const std::vector<Complex>& marked = {});

}  // namespace knotzeros
