#pragma once

#include <random>

#include "fcalc/operator_core.hpp"
#include "fcalc/spectrum_types.hpp"

namespace fcalc {

/// Commuting tuple together with its analytically known spectral spheres.
struct CommutingFixture {
  OperatorTuple tuple;
  std::vector<SpectralSphere> spheres;  // merged, sorted by (center, radius)
};

namespace fixtures {

inline Eigen::MatrixXd random_orthogonal(int d, std::mt19937_64& g) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXd A(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A(i, j) = nd(g);
  return Eigen::HouseholderQR<Eigen::MatrixXd>(A).householderQ();
}

inline std::vector<double> random_direction(int n, std::mt19937_64& g) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> u(static_cast<size_t>(n));
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (auto& v : u) {
      v = nd(g);
      n2 += v * v;
    }
  } while (n2 < 1e-6);
  for (auto& v : u) v /= std::sqrt(n2);
  return u;
}

inline std::vector<SpectralSphere> merge_spheres(std::vector<SpectralSphere> spheres,
                                                 double tol = 1e-8) {
  std::sort(spheres.begin(), spheres.end(), [](const auto& a, const auto& b) {
    return a.center != b.center ? a.center < b.center : a.radius < b.radius;
  });
  std::vector<SpectralSphere> merged;
  for (const auto& s : spheres) {
    if (!merged.empty() && std::hypot(merged.back().center - s.center,
                                      merged.back().radius - s.radius) <= tol)
      merged.back().multiplicity += s.multiplicity;
    else
      merged.push_back(s);
  }
  return merged;
}

/// Jointly diagonalized family conjugated by one orthogonal matrix: base
/// index l contributes the sphere (centers[l], radii[l]).
inline CommutingFixture from_sphere_data(const Algebra& alg,
                                         const std::vector<double>& centers,
                                         const std::vector<double>& radii,
                                         std::mt19937_64& g) {
  const int d = static_cast<int>(centers.size());
  const int n = alg.units();
  const Eigen::MatrixXd Q = random_orthogonal(d, g);
  std::vector<Eigen::VectorXd> diag(static_cast<size_t>(n + 1), Eigen::VectorXd::Zero(d));
  std::vector<SpectralSphere> spheres;
  for (int l = 0; l < d; ++l) {
    diag[0](l) = centers[static_cast<size_t>(l)];
    const auto u = random_direction(n, g);
    for (int j = 1; j <= n; ++j)
      diag[static_cast<size_t>(j)](l) = radii[static_cast<size_t>(l)] * u[static_cast<size_t>(j - 1)];
    spheres.push_back({centers[static_cast<size_t>(l)], radii[static_cast<size_t>(l)], 1});
  }
  std::vector<Eigen::MatrixXd> comps;
  for (int j = 0; j <= n; ++j)
    comps.push_back(Q * diag[static_cast<size_t>(j)].asDiagonal() * Q.transpose());
  return {OperatorTuple(alg, std::move(comps)), merge_spheres(std::move(spheres))};
}

}  // namespace fixtures

/// Generic commuting fixture with spherical spectrum, centers in
/// [-1.2, 1.2] and radii in [radius_lo, radius_hi].
inline CommutingFixture random_commuting_fixture(const Algebra& alg, int d, uint64_t seed,
                                                 double radius_lo = 0.4,
                                                 double radius_hi = 1.2) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> uc(-1.2, 1.2), ur(radius_lo, radius_hi);
  std::vector<double> centers, radii;
  for (int l = 0; l < d; ++l) {
    centers.push_back(uc(g));
    radii.push_back(ur(g));
  }
  return fixtures::from_sphere_data(alg, centers, radii, g);
}

/// Two well separated spectral groups (near -2 and near +3); the returned
/// sphere list is sorted, so the first group is exactly the spheres with
/// negative centers.
inline CommutingFixture split_spectrum_fixture(const Algebra& alg, int d, uint64_t seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> uneg(-2.3, -1.7), upos(2.7, 3.3), ur(0.2, 0.5);
  std::vector<double> centers, radii;
  for (int l = 0; l < d; ++l) {
    centers.push_back(l < d / 2 ? uneg(g) : upos(g));
    radii.push_back(ur(g));
  }
  return fixtures::from_sphere_data(alg, centers, radii, g);
}

/// Real diagonal tuple: spheres are the distinct diagonal entries, radius 0.
inline CommutingFixture diagonal_fixture(const Algebra& alg, std::vector<double> eigs) {
  const int d = static_cast<int>(eigs.size());
  std::vector<Eigen::MatrixXd> comps(static_cast<size_t>(alg.units() + 1),
                                     Eigen::MatrixXd::Zero(d, d));
  std::vector<SpectralSphere> spheres;
  for (int l = 0; l < d; ++l) {
    comps[0](l, l) = eigs[static_cast<size_t>(l)];
    spheres.push_back({eigs[static_cast<size_t>(l)], 0.0, 1});
  }
  return {OperatorTuple(alg, std::move(comps)), fixtures::merge_spheres(std::move(spheres))};
}

/// The classic non-commuting pair T_1 = [[0,1],[0,0]], T_2 = [[0,0],[1,0]].
inline OperatorTuple noncommuting_pair(const Algebra& alg) {
  std::vector<Eigen::MatrixXd> comps(static_cast<size_t>(alg.units() + 1),
                                     Eigen::MatrixXd::Zero(2, 2));
  comps[1](0, 1) = 1.0;
  comps[2](1, 0) = 1.0;
  return {alg, std::move(comps)};
}

/// Resolvent sample point: drawn in the ball of radius 2*bound, outside an
/// exclusion tube of radius `exclusion` around every spectral sphere, in a
/// random plane.
inline Paravector random_resolvent_point(const std::vector<SpectralSphere>& spheres,
                                         double bound, const Algebra& alg,
                                         std::mt19937_64& g, double exclusion = 0.1) {
  const double R = 2.0 * std::max(bound, 1.0);
  std::uniform_real_distribution<double> uu(-R, R), uv(0.0, R);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const double u = uu(g), v = uv(g);
    if (std::hypot(u, v) > R) continue;
    bool clear = true;
    for (const auto& sp : spheres)
      if (std::abs(std::complex<double>(u, v) - sp.trace()) < exclusion) clear = false;
    if (!clear) continue;
    const ImaginaryUnit I(alg, fixtures::random_direction(alg.units(), g));
    return embed_in_plane(u, v, I);
  }
  throw Error("failed to sample a resolvent point clear of the spectrum");
}

}  // namespace fcalc
