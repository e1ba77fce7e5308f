#include "qharm/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qharm/bounds.hpp"

namespace qharm {

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  // Avoid "-0.000000" so output does not depend on the sign of tiny values.
  if (std::string(buf) == "-0.000000") return "0.000000";
  return buf;
}

}  // namespace

RenderScene build_scene(const HarmonicSeries& f, const ClassParams& p,
                        const GridSpec& grid, const std::vector<double>& annulus_radii) {
  grid.validate();
  RenderScene s;
  const auto pts = grid.points();
  const auto per_ring = static_cast<std::size_t>(grid.angles_per_ring);
  double extent = 0.0;
  for (std::size_t k = 0; k < grid.radii.size(); ++k) {
    std::vector<Complex> ring;
    ring.reserve(per_ring);
    for (std::size_t j = 0; j < per_ring; ++j) {
      const Complex w = f.value(pts[k * per_ring + j]);
      extent = std::max(extent, std::abs(w));
      ring.push_back(w);
    }
    s.images.push_back(std::move(ring));
  }
  const double b1 = std::min(std::abs(f.g().coeff(1)), std::nextafter(1.0, 0.0));
  s.covering_radius = covering_radius(p, b1);
  extent = std::max(extent, s.covering_radius);
  for (double r : annulus_radii) {
    const DistortionBound d = distortion_bounds(p, b1, r);
    s.annuli.push_back({r, d.lower, d.upper});
    extent = std::max(extent, d.upper);
  }
  s.extent = extent > 0.0 ? 1.05 * extent : 1.0;
  return s;
}

std::string render_svg(const RenderScene& scene) {
  const std::string e = fixed(scene.extent);
  const std::string e2 = fixed(2.0 * scene.extent);
  const std::string stroke = fixed(scene.extent / 300.0);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"-" +
         e + " -" + e + " " + e2 + " " + e2 + "\">\n";
  out += "<g id=\"image\" fill=\"none\" stroke=\"#1f4e9a\" stroke-width=\"" + stroke + "\">\n";
  for (const auto& ring : scene.images) {
    out += "<polygon points=\"";
    for (std::size_t j = 0; j < ring.size(); ++j) {
      if (j) out += ' ';
      // SVG's y axis points down.
      out += fixed(ring[j].real()) + "," + fixed(-ring[j].imag());
    }
    out += "\"/>\n";
  }
  out += "</g>\n";
  out += "<g id=\"annuli\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"" +
         fixed(scene.extent / 60.0) + "\" stroke-width=\"" + stroke + "\">\n";
  for (const auto& a : scene.annuli) {
    if (a.lower > 0.0) {
      out += "<circle class=\"lower\" data-r=\"" + fixed(a.r) + "\" cx=\"0\" cy=\"0\" r=\"" +
             fixed(a.lower) + "\"/>\n";
    }
    out += "<circle class=\"upper\" data-r=\"" + fixed(a.r) + "\" cx=\"0\" cy=\"0\" r=\"" +
           fixed(a.upper) + "\"/>\n";
  }
  out += "</g>\n";
  out += "<circle id=\"covering\" cx=\"0\" cy=\"0\" r=\"" + fixed(scene.covering_radius) +
         "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" + fixed(2.0 * scene.extent / 300.0) +
         "\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace qharm
