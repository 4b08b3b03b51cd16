#pragma once

#include <functional>

#include "fcalc/algebra.hpp"

namespace fcalc {

using ParavectorFunction = std::function<Multivector(const Paravector&)>;

namespace fd {

inline Multivector partial(const ParavectorFunction& g, const Paravector& x, int coord,
                           double step) {
  Paravector xp = x, xm = x;
  xp[coord] += step;
  xm[coord] -= step;
  return (g(xp) - g(xm)) * (0.5 / step);
}

inline Multivector second_partial(const ParavectorFunction& g, const Paravector& x, int coord,
                                  double step) {
  Paravector xp = x, xm = x;
  xp[coord] += step;
  xm[coord] -= step;
  return (g(xp) + g(xm) - 2.0 * g(x)) * (1.0 / (step * step));
}

}  // namespace fd

/// Central-difference Laplacian over all n+1 coordinates.
inline Multivector fd_laplacian(const ParavectorFunction& g, const Paravector& x,
                                double step = 1e-3) {
  Multivector acc(x.algebra());
  for (int i = 0; i <= x.algebra().units(); ++i) acc += fd::second_partial(g, x, i, step);
  return acc;
}

/// Iterated Laplacian (Delta^h) by nested central differences.
inline Multivector fd_laplacian_power(const ParavectorFunction& g, const Paravector& x, int h,
                                      double step = 1e-3) {
  if (h == 0) return g(x);
  if (h == 1) return fd_laplacian(g, x, step);
  ParavectorFunction inner = [&, h](const Paravector& y) {
    return fd_laplacian_power(g, y, h - 1, step);
  };
  return fd_laplacian(inner, x, step);
}

/// Norm of the central-difference Dirac residual
/// d/dx_0 g + sum e_i d/dx_i g (left) or d/dx_0 g + sum (d/dx_i g) e_i (right).
inline double fd_dirac_residual(const ParavectorFunction& g, const Paravector& x,
                                double step = 1e-3, Side side = Side::left) {
  const Algebra& alg = x.algebra();
  Multivector acc = fd::partial(g, x, 0, step);
  for (int i = 1; i <= alg.units(); ++i) {
    const Multivector di = fd::partial(g, x, i, step);
    const Multivector e = Multivector::basis(alg, alg.paravector_index(i));
    acc += side == Side::left ? e * di : di * e;
  }
  return acc.norm();
}

/// Norm of the finite-difference slice Cauchy-Riemann residual on C_I:
/// d/du g + I d/dv g (left) or d/du g + (d/dv g) I (right).
inline double fd_cr_residual(const ParavectorFunction& g, double u, double v,
                             const ImaginaryUnit& I, Side side = Side::left,
                             double step = 1e-3) {
  auto at = [&](double uu, double vv) { return g(embed_in_plane(uu, vv, I)); };
  const Multivector du = (at(u + step, v) - at(u - step, v)) * (0.5 / step);
  const Multivector dv = (at(u, v + step) - at(u, v - step)) * (0.5 / step);
  const Multivector Imv = I.to_multivector();
  const Multivector res = side == Side::left ? du + Imv * dv : du + dv * Imv;
  return res.norm();
}

}  // namespace fcalc
