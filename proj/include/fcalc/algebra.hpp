#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fcalc/errors.hpp"

namespace fcalc {

enum class AlgebraKind { clifford, quaternion };
enum class Side { left, right };

/// Axially symmetric spectral set [x]: the (n-1)-sphere of paravectors with
/// real part `center` and vector norm `radius`. radius == 0 is a real point.
struct SpectralSphere {
  double center = 0.0;
  double radius = 0.0;
  int multiplicity = 1;

  bool contains(double x0, double vec_norm, double tol) const {
    return std::hypot(x0 - center, vec_norm - radius) <= tol;
  }
  /// Trace point in the upper half of any plane C_I.
  std::complex<double> trace() const { return {center, radius}; }
};

/// Descriptor of the coefficient algebra: the real Clifford algebra R_n with
/// e_i e_j + e_j e_i = -2 delta_ij, or the quaternions with basis 1,i,j,k.
/// Basis products map a pair of basis indices to a signed basis index.
class Algebra {
public:
  static Algebra clifford(int n) {
    if (n < 1 || n > 12) throw DimensionError("clifford dimension n out of range [1,12]");
    return Algebra(AlgebraKind::clifford, n);
  }
  static Algebra quaternion() { return Algebra(AlgebraKind::quaternion, 3); }

  AlgebraKind kind() const { return kind_; }
  /// Number of imaginary units in a paravector (clifford: n, quaternion: 3).
  int units() const { return units_; }
  /// Number of real coefficients of a general element (2^n or 4).
  int dim() const { return dim_; }
  /// The odd dimension entering gamma_n and the kernel exponents.  The
  /// quaternionic calculus mirrors the n = 3 Clifford formulas.
  int fueter_dimension() const { return kind_ == AlgebraKind::quaternion ? 3 : units_; }

  struct BasisProduct {
    int index;
    double sign;
  };

  BasisProduct basis_product(int a, int b) const {
    if (kind_ == AlgebraKind::quaternion) {
      static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> tbl = {{
          {{{0, 1}, {1, 1}, {2, 1}, {3, 1}}},
          {{{1, 1}, {0, -1}, {3, 1}, {2, -1}}},
          {{{2, 1}, {3, -1}, {0, -1}, {1, 1}}},
          {{{3, 1}, {2, 1}, {1, -1}, {0, -1}}},
      }};
      auto [idx, sg] = tbl[static_cast<size_t>(a)][static_cast<size_t>(b)];
      return {idx, static_cast<double>(sg)};
    }
    // Blade bitmask product: sign from transposition counting, one extra
    // minus per contracted index (e_i^2 = -1).
    unsigned ua = static_cast<unsigned>(a), ub = static_cast<unsigned>(b);
    int swaps = 0;
    unsigned ahi = ua >> 1;
    while (ahi != 0) {
      swaps += std::popcount(ahi & ub);
      ahi >>= 1;
    }
    int sign = (swaps % 2 == 0) ? 1 : -1;
    if (std::popcount(ua & ub) % 2 != 0) sign = -sign;
    return {static_cast<int>(ua ^ ub), static_cast<double>(sign)};
  }

  /// Coefficient index of paravector part i (0 = scalar part).
  int paravector_index(int part) const {
    if (kind_ == AlgebraKind::quaternion) return part;
    return part == 0 ? 0 : (1 << (part - 1));
  }

  std::string basis_name(int index) const {
    if (kind_ == AlgebraKind::quaternion) {
      static const char* names[4] = {"1", "i", "j", "k"};
      return names[index];
    }
    if (index == 0) return "1";
    std::string s = "e";
    for (int i = 0; i < units_; ++i)
      if (index & (1 << i)) s += std::to_string(i + 1);
    return s;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.kind_ == b.kind_ && a.units_ == b.units_;
  }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

private:
  Algebra(AlgebraKind kind, int units)
      : kind_(kind), units_(units),
        dim_(kind == AlgebraKind::quaternion ? 4 : (1 << units)) {}

  AlgebraKind kind_;
  int units_;
  int dim_;
};

inline void require_same_algebra(const Algebra& a, const Algebra& b) {
  if (a != b) throw DimensionError("operands belong to different algebras");
}

class Multivector {
public:
  explicit Multivector(const Algebra& alg)
      : alg_(alg), c_(static_cast<size_t>(alg.dim()), 0.0) {}

  static Multivector scalar(const Algebra& alg, double v) {
    Multivector m(alg);
    m.c_[0] = v;
    return m;
  }
  static Multivector basis(const Algebra& alg, int index, double v = 1.0) {
    Multivector m(alg);
    m.c_[static_cast<size_t>(index)] = v;
    return m;
  }

  const Algebra& algebra() const { return alg_; }
  int dim() const { return alg_.dim(); }
  double operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  const std::vector<double>& coeffs() const { return c_; }

  double scalar_part() const { return c_[0]; }

  double norm() const {
    double s = 0.0;
    for (double v : c_) s += v * v;
    return std::sqrt(s);
  }

  Multivector& operator+=(const Multivector& o) {
    require_same_algebra(alg_, o.alg_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    require_same_algebra(alg_, o.alg_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Multivector& operator*=(double v) {
    for (double& x : c_) x *= v;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double v) { return a *= v; }
  friend Multivector operator*(double v, Multivector a) { return a *= v; }
  friend Multivector operator-(const Multivector& a) {
    Multivector r = a;
    return r *= -1.0;
  }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    require_same_algebra(a.alg_, b.alg_);
    Multivector r(a.alg_);
    const int d = a.dim();
    for (int i = 0; i < d; ++i) {
      const double ai = a.c_[static_cast<size_t>(i)];
      if (ai == 0.0) continue;
      for (int j = 0; j < d; ++j) {
        const double bj = b.c_[static_cast<size_t>(j)];
        if (bj == 0.0) continue;
        auto [idx, sign] = a.alg_.basis_product(i, j);
        r.c_[static_cast<size_t>(idx)] += sign * ai * bj;
      }
    }
    return r;
  }

  /// Largest |coefficient| outside the span of {1, I}.
  double off_plane_norm(const class ImaginaryUnit& I) const;

private:
  Algebra alg_;
  std::vector<double> c_;
};

/// Unit 1-vector I (clifford) or unit imaginary quaternion; I^2 = -1.
class ImaginaryUnit {
public:
  ImaginaryUnit(const Algebra& alg, std::vector<double> comps)
      : alg_(alg), u_(std::move(comps)) {
    if (static_cast<int>(u_.size()) != alg.units())
      throw DimensionError("imaginary unit needs exactly n components");
    double s = 0.0;
    for (double v : u_) s += v * v;
    if (std::abs(s - 1.0) > 1e-9) throw DimensionError("imaginary unit must have unit norm");
  }

  static ImaginaryUnit axis(const Algebra& alg, int j) {
    std::vector<double> c(static_cast<size_t>(alg.units()), 0.0);
    c[static_cast<size_t>(j - 1)] = 1.0;
    return {alg, std::move(c)};
  }

  const Algebra& algebra() const { return alg_; }
  const std::vector<double>& components() const { return u_; }

  Multivector to_multivector() const {
    Multivector m(alg_);
    for (int i = 0; i < alg_.units(); ++i)
      m[alg_.paravector_index(i + 1)] = u_[static_cast<size_t>(i)];
    return m;
  }

private:
  Algebra alg_;
  std::vector<double> u_;
};

inline double Multivector::off_plane_norm(const ImaginaryUnit& I) const {
  // Project onto span{1, I} and measure what is left.
  const auto& u = I.components();
  double proj = 0.0;
  for (int i = 0; i < alg_.units(); ++i)
    proj += u[static_cast<size_t>(i)] * c_[static_cast<size_t>(alg_.paravector_index(i + 1))];
  Multivector rest = *this;
  rest[0] = 0.0;
  for (int i = 0; i < alg_.units(); ++i) {
    int idx = alg_.paravector_index(i + 1);
    rest[idx] -= proj * u[static_cast<size_t>(i)];
  }
  double m = 0.0;
  for (double v : rest.coeffs()) m = std::max(m, std::abs(v));
  return m;
}

/// Paravector x = x_0 + x_1 e_1 + ... + x_n e_n (quaternion: x_0+ix_1+jx_2+kx_3).
class Paravector {
public:
  Paravector(const Algebra& alg, std::vector<double> parts)
      : alg_(alg), p_(std::move(parts)) {
    if (static_cast<int>(p_.size()) != alg.units() + 1)
      throw DimensionError("paravector needs exactly n+1 parts");
  }

  static Paravector zero(const Algebra& alg) {
    return {alg, std::vector<double>(static_cast<size_t>(alg.units() + 1), 0.0)};
  }
  static Paravector real(const Algebra& alg, double v) {
    Paravector p = zero(alg);
    p.p_[0] = v;
    return p;
  }

  const Algebra& algebra() const { return alg_; }
  const std::vector<double>& parts() const { return p_; }
  double operator[](int i) const { return p_[static_cast<size_t>(i)]; }
  double& operator[](int i) { return p_[static_cast<size_t>(i)]; }

  double real_part() const { return p_[0]; }

  double vec_norm() const {
    double s = 0.0;
    for (size_t i = 1; i < p_.size(); ++i) s += p_[i] * p_[i];
    return std::sqrt(s);
  }
  double norm2() const {
    double s = 0.0;
    for (double v : p_) s += v * v;
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

  Paravector conjugate() const {
    Paravector r = *this;
    for (size_t i = 1; i < r.p_.size(); ++i) r.p_[i] = -r.p_[i];
    return r;
  }

  /// x^{-1} = conj(x)/|x|^2.
  Paravector inverse() const {
    double n2 = norm2();
    if (n2 <= 0.0) throw SingularityError("inverse of zero paravector");
    Paravector r = conjugate();
    for (double& v : r.p_) v /= n2;
    return r;
  }

  Multivector to_multivector() const {
    Multivector m(alg_);
    for (size_t i = 0; i < p_.size(); ++i)
      m[alg_.paravector_index(static_cast<int>(i))] = p_[i];
    return m;
  }

  SpectralSphere sphere() const { return {real_part(), vec_norm(), 1}; }

  /// Coordinate u+iv of this point in its own plane, v = |vec part| >= 0.
  std::complex<double> plane_coordinate() const { return {real_part(), vec_norm()}; }

  Paravector& operator+=(const Paravector& o) {
    require_same_algebra(alg_, o.alg_);
    for (size_t i = 0; i < p_.size(); ++i) p_[i] += o.p_[i];
    return *this;
  }
  Paravector& operator-=(const Paravector& o) {
    require_same_algebra(alg_, o.alg_);
    for (size_t i = 0; i < p_.size(); ++i) p_[i] -= o.p_[i];
    return *this;
  }
  Paravector& operator*=(double v) {
    for (double& x : p_) x *= v;
    return *this;
  }

  friend Paravector operator+(Paravector a, const Paravector& b) { return a += b; }
  friend Paravector operator-(Paravector a, const Paravector& b) { return a -= b; }
  friend Paravector operator*(Paravector a, double v) { return a *= v; }
  friend Paravector operator*(double v, Paravector a) { return a *= v; }
  friend Paravector operator-(const Paravector& a) {
    Paravector r = a;
    return r *= -1.0;
  }

  friend Multivector operator*(const Paravector& a, const Paravector& b) {
    return a.to_multivector() * b.to_multivector();
  }
  friend Multivector operator*(const Paravector& a, const Multivector& b) {
    return a.to_multivector() * b;
  }
  friend Multivector operator*(const Multivector& a, const Paravector& b) {
    return a * b.to_multivector();
  }

private:
  Algebra alg_;
  std::vector<double> p_;
};

inline SpectralSphere sphere_of(const Paravector& x) { return x.sphere(); }

/// u + I v.
inline Paravector embed_in_plane(double u, double v, const ImaginaryUnit& I) {
  const Algebra& alg = I.algebra();
  std::vector<double> parts(static_cast<size_t>(alg.units() + 1), 0.0);
  parts[0] = u;
  for (int i = 0; i < alg.units(); ++i)
    parts[static_cast<size_t>(i + 1)] = v * I.components()[static_cast<size_t>(i)];
  return {alg, std::move(parts)};
}

inline Paravector embed_in_plane(std::complex<double> z, const ImaginaryUnit& I) {
  return embed_in_plane(z.real(), z.imag(), I);
}

/// Decomposition s = u + I_s v with v >= 0.  For (numerically) real s the
/// direction is arbitrary and falls back to the first axis; all plane
/// arithmetic then stays real, so the choice never leaks into results.
struct PlanePoint {
  std::complex<double> z;
  ImaginaryUnit direction;
};

inline PlanePoint plane_of(const Paravector& s, double real_tol = 1e-300) {
  const Algebra& alg = s.algebra();
  const double v = s.vec_norm();
  if (v <= real_tol) {
    return {{s.real_part(), 0.0}, ImaginaryUnit::axis(alg, 1)};
  }
  std::vector<double> u(static_cast<size_t>(alg.units()));
  for (int i = 0; i < alg.units(); ++i) u[static_cast<size_t>(i)] = s[i + 1] / v;
  return {{s.real_part(), v}, ImaginaryUnit(alg, std::move(u))};
}

}  // namespace fcalc
