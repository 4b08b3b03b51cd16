#pragma once

#include <functional>

#include "fcalc/contour.hpp"
#include "fcalc/kernels.hpp"
#include "fcalc/slice_function.hpp"

namespace fcalc {

using ScalarKernel = std::function<Multivector(const Paravector&)>;

/// (1/2pi) contour integral of K(s) ds_I f(s) (left) or f(s) ds_I K(s)
/// (right), by the trapezoid rule on each circle.
inline Multivector contour_integral_pointwise(Side side, const ScalarKernel& kernel,
                                              const SliceFunction& f, const Contour& contour) {
  Multivector acc(f.algebra());
  for_each_contour_node(contour, [&](const Paravector& s, const Paravector& w) {
    const Multivector ks = kernel(s);
    const Multivector fs = f.evaluate(s);
    if (side == Side::left)
      acc += ks * w.to_multivector() * fs;
    else
      acc += fs * w.to_multivector() * ks;
  });
  return acc;
}

/// Cauchy reproduction: f(x) = (1/2pi) int S_L^{-1}(s,x) ds_I f(s) for x
/// inside the swept region; near-zero when x is outside.
inline Multivector cauchy_formula(Side side, const SliceFunction& f, const Paravector& x,
                                  const Contour& contour) {
  ScalarKernel k = [&x, side](const Paravector& s) {
    return cauchy_kernel(side, KernelForm::two, s, x);
  };
  return contour_integral_pointwise(side, k, f, contour);
}

/// Fueter-Sce transform in integral form:
/// breve f(x) = (1/2pi) int F_n^L(s,x) ds_I f(s), equal to
/// Delta^{(n-1)/2} f at x; the output is monogenic in x.
inline Multivector fueter_sce_pointwise(Side side, const SliceFunction& f, const Paravector& x,
                                        const Contour& contour) {
  ScalarKernel k = [&x, side](const Paravector& s) { return f_kernel(side, s, x); };
  return contour_integral_pointwise(side, k, f, contour);
}

}  // namespace fcalc
