#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "fcalc/algebra.hpp"

namespace fcalc {

/// Slice monogenic test functions: one-sided polynomials with Clifford
/// coefficients (left: f(s) = sum s^m a_m, right: f(s) = sum a_m s^m) and
/// intrinsic rational functions p/q with real coefficients, which map every
/// plane C_I into itself and are slice monogenic on both sides.
class SliceFunction {
public:
  enum class Repr { polynomial, intrinsic_rational };

  static SliceFunction polynomial(Side side, std::vector<Multivector> coeffs) {
    if (coeffs.empty()) throw DimensionError("polynomial needs at least one coefficient");
    SliceFunction f(coeffs.front().algebra());
    f.repr_ = Repr::polynomial;
    f.side_ = side;
    f.coeffs_ = std::move(coeffs);
    return f;
  }

  /// s^m (intrinsic; usable on either side).
  static SliceFunction monomial(const Algebra& alg, Side side, int degree) {
    std::vector<Multivector> c(static_cast<size_t>(degree + 1), Multivector(alg));
    c.back()[0] = 1.0;
    return polynomial(side, std::move(c));
  }

  static SliceFunction constant(Side side, const Multivector& a0) {
    return polynomial(side, {a0});
  }

  static SliceFunction intrinsic_rational(const Algebra& alg, std::vector<double> num,
                                          std::vector<double> den) {
    if (num.empty() || den.empty())
      throw DimensionError("rational needs nonempty numerator and denominator");
    SliceFunction f(alg);
    f.repr_ = Repr::intrinsic_rational;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
  }

  const Algebra& algebra() const { return alg_; }
  Repr repr() const { return repr_; }
  Side side() const { return side_; }
  bool intrinsic() const {
    if (repr_ == Repr::intrinsic_rational) return true;
    // A polynomial with real (scalar blade only) coefficients is intrinsic.
    for (const auto& a : coeffs_)
      for (int i = 1; i < a.dim(); ++i)
        if (a[i] != 0.0) return false;
    return true;
  }
  const std::vector<Multivector>& coefficients() const { return coeffs_; }
  const std::vector<double>& numerator() const { return num_; }
  const std::vector<double>& denominator() const { return den_; }

  Multivector evaluate(const Paravector& s) const {
    require_same_algebra(alg_, s.algebra());
    const PlanePoint ps = plane_of(s);
    if (repr_ == Repr::intrinsic_rational) {
      const std::complex<double> p = horner(num_, ps.z);
      const std::complex<double> q = horner(den_, ps.z);
      const double scale = std::max(1.0, std::abs(ps.z));
      if (std::abs(q) <= 1e-14 * scale)
        throw DomainError("rational function evaluated at a pole");
      return embed_in_plane(p / q, ps.direction).to_multivector();
    }
    Multivector acc(alg_);
    std::complex<double> zp = 1.0;
    for (size_t m = 0; m < coeffs_.size(); ++m) {
      const Multivector power = embed_in_plane(zp, ps.direction).to_multivector();
      acc += side_ == Side::left ? power * coeffs_[m] : coeffs_[m] * power;
      zp *= ps.z;
    }
    return acc;
  }

  Multivector operator()(const Paravector& s) const { return evaluate(s); }

  /// Restriction to a plane: value at u + Iv.
  Multivector evaluate_at(double u, double v, const ImaginaryUnit& I) const {
    return evaluate(embed_in_plane(u, v, I));
  }

private:
  explicit SliceFunction(const Algebra& alg) : alg_(alg) {}

  static std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
  }

  Algebra alg_;
  Repr repr_ = Repr::polynomial;
  Side side_ = Side::left;
  std::vector<Multivector> coeffs_;
  std::vector<double> num_, den_;
};

/// Representation formula: recover f(u + I_x v) from the two values on the
/// plane C_I.  Left version f(x) = [1 - I_x I] f(u+Iv)/2 + [1 + I_x I] f(u-Iv)/2;
/// the right version carries the brackets on the other side.
inline Multivector representation_formula(const SliceFunction& f, double u, double v,
                                          const ImaginaryUnit& I, const ImaginaryUnit& I_x) {
  const Algebra& alg = f.algebra();
  const Multivector one = Multivector::scalar(alg, 1.0);
  const Multivector ImI = I_x.to_multivector() * I.to_multivector();
  const Multivector fp = f.evaluate(embed_in_plane(u, v, I));
  const Multivector fm = f.evaluate(embed_in_plane(u, -v, I));
  const bool left = f.repr() == SliceFunction::Repr::intrinsic_rational ||
                    f.side() == Side::left;
  if (left) return ((one - ImI) * fp + (one + ImI) * fm) * 0.5;
  const Multivector IIm = I.to_multivector() * I_x.to_multivector();
  return (fp * (one - IIm) + fm * (one + IIm)) * 0.5;
}

}  // namespace fcalc
