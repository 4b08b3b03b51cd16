#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fcalc/algebra.hpp"

namespace fcalc {

struct Circle {
  double center = 0.0;  // on the real axis
  double radius = 1.0;

  bool encloses(std::complex<double> z) const { return std::abs(z - center) < radius; }
  /// Signed clearance of a trace point from the ring (negative inside).
  double ring_distance(std::complex<double> z) const {
    return std::abs(std::abs(z - center) - radius);
  }
};

/// Quadrature contour: a union of circles centered on the real axis inside
/// one plane C_I.  Each circle is conjugation-symmetric, so the swept region
/// is axially symmetric.  Nodes are the uniform trapezoid nodes; with
/// ds_I = -ds I and s(t) = c + rho e^{It}, the measure is ds_I = rho e^{It} dt.
struct Contour {
  ImaginaryUnit plane;
  std::vector<Circle> circles;
  int nodes_per_circle = 256;

  Contour(ImaginaryUnit I, std::vector<Circle> cs, int nodes = 256)
      : plane(std::move(I)), circles(std::move(cs)), nodes_per_circle(nodes) {
    if (nodes_per_circle < 2) throw ContourError("contour needs at least 2 nodes per circle");
    for (const Circle& c : circles)
      if (!(c.radius > 0.0)) throw ContourError("contour circle radius must be positive");
  }

  Contour with_plane(const ImaginaryUnit& I) const {
    return Contour(I, circles, nodes_per_circle);
  }
  Contour with_nodes(int nodes) const { return Contour(plane, circles, nodes); }

  bool encloses(std::complex<double> z) const {
    for (const Circle& c : circles)
      if (c.encloses(z)) return true;
    return false;
  }
  double ring_distance(std::complex<double> z) const {
    double d = std::numeric_limits<double>::infinity();
    for (const Circle& c : circles) d = std::min(d, c.ring_distance(z));
    return d;
  }
};

inline Contour single_circle(const ImaginaryUnit& I, double center, double radius,
                             int nodes = 256) {
  return Contour(I, {Circle{center, radius}}, nodes);
}

/// Sweeps a closed-contour accumulation: calls `node(s, w)` for every node,
/// where s = c + rho e^{I t} and w = rho e^{I t} / N is the ds_I
/// trapezoid weight already divided by 2*pi.
template <typename NodeFn>
void for_each_contour_node(const Contour& contour, NodeFn&& node) {
  const int N = contour.nodes_per_circle;
  for (const Circle& c : contour.circles) {
    for (int k = 0; k < N; ++k) {
      const double t = 2.0 * std::numbers::pi * k / N;
      const std::complex<double> e{std::cos(t), std::sin(t)};
      const std::complex<double> z = c.center + c.radius * e;
      node(embed_in_plane(z, contour.plane), embed_in_plane(c.radius * e / double(N), contour.plane));
    }
  }
}

}  // namespace fcalc
