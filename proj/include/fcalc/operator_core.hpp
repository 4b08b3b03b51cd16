#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "fcalc/algebra.hpp"
#include "fcalc/kernels.hpp"

namespace fcalc {

/// n+1 commuting real d x d matrices T_0..T_n representing the paravector
/// operator T = T_0 + sum e_j T_j on V_n = R^d (x) R_n.
struct OperatorTuple {
  Algebra alg;
  int d = 0;
  std::vector<Eigen::MatrixXd> components;  // units()+1 entries
  double commutativity_tol = 1e-10;

  OperatorTuple(Algebra algebra, std::vector<Eigen::MatrixXd> comps, double tol = 1e-10)
      : alg(algebra), components(std::move(comps)), commutativity_tol(tol) {
    if (static_cast<int>(components.size()) != alg.units() + 1)
      throw DimensionError("operator tuple needs exactly n+1 components");
    d = static_cast<int>(components.front().rows());
    for (const auto& m : components)
      if (m.rows() != d || m.cols() != d)
        throw DimensionError("operator tuple components must be square and equally sized");
  }

  static OperatorTuple zero(const Algebra& alg, int d) {
    std::vector<Eigen::MatrixXd> c(static_cast<size_t>(alg.units() + 1),
                                   Eigen::MatrixXd::Zero(d, d));
    return {alg, std::move(c)};
  }

  /// sum of per-component spectral norms; bounds the F-spectrum radius.
  double norm_bound() const {
    double b = 0.0;
    for (const auto& m : components)
      b += m.jacobiSvd().singularValues()(0);
    return b;
  }
};

struct CommutationReport {
  double max_commutator = 0.0;
  int worst_i = 0, worst_j = 0;
  double tol = 0.0;
  bool pass = true;
};

inline CommutationReport validate_commuting(const OperatorTuple& T) {
  CommutationReport rep;
  rep.tol = T.commutativity_tol;
  for (size_t i = 0; i < T.components.size(); ++i) {
    for (size_t j = i + 1; j < T.components.size(); ++j) {
      const Eigen::MatrixXd& A = T.components[i];
      const Eigen::MatrixXd& B = T.components[j];
      const double scale = std::max(1.0, A.norm() * B.norm());
      const double c = (A * B - B * A).norm() / scale;
      if (c > rep.max_commutator) {
        rep.max_commutator = c;
        rep.worst_i = static_cast<int>(i);
        rep.worst_j = static_cast<int>(j);
      }
    }
  }
  rep.pass = rep.max_commutator <= rep.tol;
  return rep;
}

inline void require_commuting(const OperatorTuple& T) {
  CommutationReport rep = validate_commuting(T);
  if (!rep.pass)
    throw ValidationError("operator tuple components do not commute (max relative commutator " +
                          std::to_string(rep.max_commutator) + " between components " +
                          std::to_string(rep.worst_i) + " and " + std::to_string(rep.worst_j) +
                          ")");
}

/// conj(T) = T_0 - e_1 T_1 - ... - e_n T_n.
inline OperatorTuple conjugate_tuple(const OperatorTuple& T) {
  OperatorTuple r = T;
  for (size_t j = 1; j < r.components.size(); ++j) r.components[j] = -r.components[j];
  return r;
}

/// Real matrix on V_n = R^d (x) R_n with blade-major coordinates
/// (blade index, base index) -> row B*d + i.
class CliffordOp {
public:
  CliffordOp(Algebra alg, int d, Eigen::MatrixXd m)
      : alg_(alg), d_(d), m_(std::move(m)) {
    if (m_.rows() != alg_.dim() * d_ || m_.cols() != m_.rows())
      throw DimensionError("operator matrix has wrong size");
  }

  static CliffordOp zero(const Algebra& alg, int d) {
    return {alg, d, Eigen::MatrixXd::Zero(alg.dim() * d, alg.dim() * d)};
  }
  static CliffordOp identity(const Algebra& alg, int d) {
    return {alg, d, Eigen::MatrixXd::Identity(alg.dim() * d, alg.dim() * d)};
  }

  const Algebra& algebra() const { return alg_; }
  int base_dim() const { return d_; }
  int rows() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  Eigen::MatrixXd& matrix() { return m_; }

  double frobenius_norm() const { return m_.norm(); }
  double spectral_norm() const {
    if (m_.rows() == 0) return 0.0;
    return m_.jacobiSvd().singularValues()(0);
  }

  CliffordOp& operator+=(const CliffordOp& o) {
    check(o);
    m_ += o.m_;
    return *this;
  }
  CliffordOp& operator-=(const CliffordOp& o) {
    check(o);
    m_ -= o.m_;
    return *this;
  }
  CliffordOp& operator*=(double v) {
    m_ *= v;
    return *this;
  }

  friend CliffordOp operator+(CliffordOp a, const CliffordOp& b) { return a += b; }
  friend CliffordOp operator-(CliffordOp a, const CliffordOp& b) { return a -= b; }
  friend CliffordOp operator*(CliffordOp a, double v) { return a *= v; }
  friend CliffordOp operator*(double v, CliffordOp a) { return a *= v; }
  friend CliffordOp operator-(const CliffordOp& a) {
    CliffordOp r = a;
    return r *= -1.0;
  }
  friend CliffordOp operator*(const CliffordOp& a, const CliffordOp& b) {
    a.check(b);
    return {a.alg_, a.d_, a.m_ * b.m_};
  }

  CliffordOp pow(int k) const {
    CliffordOp r = identity(alg_, d_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

private:
  void check(const CliffordOp& o) const {
    if (alg_ != o.alg_ || d_ != o.d_)
      throw DimensionError("operator matrices live on different modules");
  }

  Algebra alg_;
  int d_;
  Eigen::MatrixXd m_;
};

/// Matrix of left multiplication by `a` on the coefficient algebra alone.
inline Eigen::MatrixXd left_mult_coeff_matrix(const Multivector& a) {
  const Algebra& alg = a.algebra();
  const int dim = alg.dim();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(dim, dim);
  for (int A = 0; A < dim; ++A) {
    const double v = a[A];
    if (v == 0.0) continue;
    for (int B = 0; B < dim; ++B) {
      auto [idx, sign] = alg.basis_product(A, B);
      L(idx, B) += sign * v;
    }
  }
  return L;
}

/// lift(M): the real component matrix acting on every blade coefficient.
inline CliffordOp lift(const Algebra& alg, const Eigen::MatrixXd& M) {
  const int dim = alg.dim();
  const int d = static_cast<int>(M.rows());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim * d, dim * d);
  for (int B = 0; B < dim; ++B) m.block(B * d, B * d, d, d) = M;
  return {alg, d, std::move(m)};
}

/// L_a: module operator v -> a v.
inline CliffordOp left_multiplier(const Multivector& a, int d) {
  const Algebra& alg = a.algebra();
  const int dim = alg.dim();
  const Eigen::MatrixXd L = left_mult_coeff_matrix(a);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim * d, dim * d);
  for (int C = 0; C < dim; ++C)
    for (int B = 0; B < dim; ++B)
      if (L(C, B) != 0.0)
        m.block(C * d, B * d, d, d) =
            L(C, B) * Eigen::MatrixXd::Identity(d, d);
  return {alg, d, std::move(m)};
}

inline CliffordOp left_multiplier(const Paravector& s, int d) {
  return left_multiplier(s.to_multivector(), d);
}

/// Faithful representation of T = T_0 + sum e_j T_j.
inline CliffordOp encode(const OperatorTuple& T) {
  CliffordOp r = lift(T.alg, T.components[0]);
  for (int j = 1; j <= T.alg.units(); ++j) {
    const Multivector ej = Multivector::basis(T.alg, T.alg.paravector_index(j));
    r += left_multiplier(ej, T.d) * lift(T.alg, T.components[static_cast<size_t>(j)]);
  }
  return r;
}

/// Plane power s^k embedded back as a paravector.
inline Paravector paravector_power(const Paravector& s, int k) {
  const PlanePoint ps = plane_of(s);
  std::complex<double> z = 1.0;
  for (int i = 0; i < k; ++i) z *= ps.z;
  return embed_in_plane(z, ps.direction);
}

/// The quadratic operator pencil s^2 I - s(T + conj(T)) + T conj(T), built
/// as L_{s^2} - L_s lift(2 T_0) + lift(T_0^2 + sum T_j^2) (commuting form),
/// with its LU factorization and condition estimate.
class Pencil {
public:
  Pencil(const Paravector& s, const OperatorTuple& T, double cond_threshold = 1e12)
      : op_(CliffordOp::zero(T.alg, T.d)) {
    require_same_algebra(s.algebra(), T.alg);
    Eigen::MatrixXd B = T.components[0] * T.components[0];
    for (int j = 1; j <= T.alg.units(); ++j)
      B += T.components[static_cast<size_t>(j)] * T.components[static_cast<size_t>(j)];
    op_ = left_multiplier(paravector_power(s, 2), T.d) -
          left_multiplier(s, T.d) * lift(T.alg, 2.0 * T.components[0]) + lift(T.alg, B);
    lu_.compute(op_.matrix());
    const double rc = lu_.rcond();
    cond_ = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!(cond_ < cond_threshold)) {
      const SpectralSphere sp = s.sphere();
      throw SpectralPointError("pencil is singular or ill-conditioned at (" +
                                   std::to_string(sp.center) + ", " + std::to_string(sp.radius) +
                                   "): condition " + std::to_string(cond_),
                               sp.center, sp.radius);
    }
  }

  const CliffordOp& matrix() const { return op_; }
  double condition() const { return cond_; }

  /// Q_s(T)^power by repeated solves.
  CliffordOp inverse_power(int power) const {
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(op_.rows(), op_.rows());
    for (int i = 0; i < power; ++i) x = lu_.solve(x);
    return {op_.algebra(), op_.base_dim(), std::move(x)};
  }

  CliffordOp solve(const CliffordOp& rhs) const {
    return {op_.algebra(), op_.base_dim(), lu_.solve(rhs.matrix())};
  }

private:
  CliffordOp op_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  double cond_ = 0.0;
};

/// Q_s(T)^power = (s^2 I - s(T+conj T) + T conj T)^{-power}.
inline CliffordOp q_operator(const Paravector& s, const OperatorTuple& T, int power = 1,
                             double cond_threshold = 1e12) {
  if (power < 1) throw DimensionError("q_operator power must be positive");
  return Pencil(s, T, cond_threshold).inverse_power(power);
}

/// SC-resolvents: (s I - conj T) Q_s(T) (left) and Q_s(T) (s I - conj T) (right).
inline CliffordOp sc_resolvent(Side side, const Paravector& s, const OperatorTuple& T,
                               double cond_threshold = 1e12) {
  const Pencil pencil(s, T, cond_threshold);
  const CliffordOp head = left_multiplier(s, T.d) - encode(conjugate_tuple(T));
  if (side == Side::left) return head * pencil.inverse_power(1);
  return pencil.solve(head);
}

/// F-resolvents: gamma_n (s I - conj T) Q_s(T)^{(n+1)/2} and its mirror.
inline CliffordOp f_resolvent(Side side, const Paravector& s, const OperatorTuple& T,
                              double cond_threshold = 1e12) {
  const int n = T.alg.fueter_dimension();
  const double g = gamma_constant(n);
  const Pencil pencil(s, T, cond_threshold);
  const CliffordOp head = left_multiplier(s, T.d) - encode(conjugate_tuple(T));
  if (side == Side::left) return g * (head * pencil.inverse_power((n + 1) / 2));
  return g * (pencil.inverse_power((n + 1) / 2) * head);
}

/// Correction sums of the generalized F-resolvent equations:
/// M^L_m = gamma_n sum_{i<m} T^i Q_s^{(n-1)/2} s^{m-1-i} and the mirrored
/// right version; m = 0 gives the zero operator.
inline CliffordOp m_sum(Side side, int m, const Paravector& s, const OperatorTuple& T,
                        double cond_threshold = 1e12) {
  if (m < 0) throw DimensionError("m_sum order must be nonnegative");
  CliffordOp acc = CliffordOp::zero(T.alg, T.d);
  if (m == 0) return acc;
  const int n = T.alg.fueter_dimension();
  const double g = gamma_constant(n);
  const CliffordOp q = Pencil(s, T, cond_threshold).inverse_power((n - 1) / 2);
  const CliffordOp enc = encode(T);
  CliffordOp t_power = CliffordOp::identity(T.alg, T.d);
  for (int i = 0; i < m; ++i) {
    const CliffordOp sp = left_multiplier(paravector_power(s, m - 1 - i), T.d);
    acc += side == Side::left ? t_power * q * sp : sp * q * t_power;
    t_power = t_power * enc;
  }
  return g * acc;
}

}  // namespace fcalc
