#pragma once

// SVG picture of f(D): images of concentric circles, the covering disc and
// distortion annuli.

#include <string>
#include <vector>

#include "qharm/classes.hpp"
#include "qharm/series.hpp"

namespace qharm {

struct RenderScene {
  /// images[k] = f(r_k e^{i theta_j}) for the rings of the grid.
  std::vector<std::vector<Complex>> images;
  double covering_radius = 0.0;
  /// (r, lower, upper) for each annulus radius.
  struct Annulus {
    double r, lower, upper;
  };
  std::vector<Annulus> annuli;
  double extent = 1.0;
};

/// b1 is read as |f.g().coeff(1)|.
RenderScene build_scene(const HarmonicSeries& f, const ClassParams& p,
                        const GridSpec& grid, const std::vector<double>& annulus_radii);

std::string render_svg(const RenderScene& scene);

}  // namespace qharm
