#pragma once

#include <cmath>
#include <complex>

#include "fcalc/algebra.hpp"

namespace fcalc {

enum class KernelForm { one, two };

/// gamma_n = (-1)^{(n-1)/2} 2^{n-1} [((n-1)/2)!]^2, n odd.
inline double gamma_constant(int n) {
  if (n < 1 || n % 2 == 0)
    throw DimensionError("gamma_n requires odd n >= 1 (even dimensions unsupported)");
  const int m = (n - 1) / 2;
  double fact = 1.0;
  for (int k = 2; k <= m; ++k) fact *= k;
  double g = std::ldexp(fact * fact, n - 1);
  return (m % 2 == 0) ? g : -g;
}

/// (-1)^h prod_{l=1..h}(2l) * prod_{l=1..h}(n-(2l-1)); equals gamma_n at
/// h = (n-1)/2.
inline double laplacian_power_constant(int n, int h) {
  double c = 1.0;
  for (int l = 1; l <= h; ++l) c *= 2.0 * l;
  for (int l = 1; l <= h; ++l) c *= static_cast<double>(n - (2 * l - 1));
  return (h % 2 == 0) ? c : -c;
}

/// Kernel arguments must avoid the sphere [other]: both spheres reduce to
/// trace points in the closed upper half plane, so membership is plain
/// complex distance.
inline void require_off_sphere(const Paravector& x, const Paravector& s, double tol = 1e-12) {
  const std::complex<double> zx = x.plane_coordinate();
  const std::complex<double> zs = s.plane_coordinate();
  const double scale = std::max({1.0, std::abs(zx), std::abs(zs)});
  if (std::abs(zx - zs) <= tol * scale)
    throw DomainError("kernel argument lies on the excluded sphere");
}

namespace detail {

/// (z^2 - 2 Re(x) z + |x|^2)^{-k} evaluated in the plane of s and embedded
/// back as a paravector.  The base vanishes exactly on [x].
inline Paravector pencil_inverse_power(const Paravector& s, const Paravector& x, int k) {
  const PlanePoint ps = plane_of(s);
  const std::complex<double> base =
      ps.z * ps.z - 2.0 * x.real_part() * ps.z + std::complex<double>(x.norm2());
  if (std::abs(base) == 0.0) throw DomainError("kernel evaluated on the excluded sphere");
  std::complex<double> w = 1.0 / base;
  std::complex<double> acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= w;
  return embed_in_plane(acc, ps.direction);
}

}  // namespace detail

/// Slice monogenic Cauchy kernels S_L^{-1}, S_R^{-1} in forms I and II.
inline Multivector cauchy_kernel(Side side, KernelForm form, const Paravector& s,
                                 const Paravector& x) {
  require_same_algebra(s.algebra(), x.algebra());
  require_off_sphere(x, s);
  if (form == KernelForm::two) {
    // (s - conj(x)) (s^2 - 2Re(x)s + |x|^2)^{-1}, factors swapped on the right.
    const Paravector q = detail::pencil_inverse_power(s, x, 1);
    const Multivector head = (s - x.conjugate()).to_multivector();
    return side == Side::left ? head * q.to_multivector() : q.to_multivector() * head;
  }
  // Form I: -(x^2 - 2Re(s)x + |s|^2)^{-1} (x - conj(s)), mirrored on the right.
  const Paravector q = detail::pencil_inverse_power(x, s, 1);
  const Multivector head = (x - s.conjugate()).to_multivector();
  Multivector r = side == Side::left ? q.to_multivector() * head : head * q.to_multivector();
  return -r;
}

/// Closed form of Delta^h applied (in x) to the form-II Cauchy kernel.
inline Multivector laplacian_power_kernel(Side side, int h, const Paravector& s,
                                          const Paravector& x) {
  require_same_algebra(s.algebra(), x.algebra());
  if (h < 0) throw DimensionError("laplacian power must be nonnegative");
  if (h == 0) return cauchy_kernel(side, KernelForm::two, s, x);
  require_off_sphere(x, s);
  const int n = s.algebra().fueter_dimension();
  const double c = laplacian_power_constant(n, h);
  const Paravector q = detail::pencil_inverse_power(s, x, h + 1);
  const Multivector head = (s - x.conjugate()).to_multivector();
  Multivector r = side == Side::left ? head * q.to_multivector() : q.to_multivector() * head;
  return r * c;
}

/// F_n-kernel: gamma_n (s - conj(x)) (s^2 - 2Re(x)s + |x|^2)^{-(n+1)/2},
/// factors mirrored for the right kernel.
inline Multivector f_kernel(Side side, const Paravector& s, const Paravector& x) {
  require_same_algebra(s.algebra(), x.algebra());
  require_off_sphere(x, s);
  const int n = s.algebra().fueter_dimension();
  if (n % 2 == 0) throw DimensionError("F_n kernel requires odd n");
  const double g = gamma_constant(n);
  const Paravector q = detail::pencil_inverse_power(s, x, (n + 1) / 2);
  const Multivector head = (s - x.conjugate()).to_multivector();
  Multivector r = side == Side::left ? head * q.to_multivector() : q.to_multivector() * head;
  return r * g;
}

}  // namespace fcalc
