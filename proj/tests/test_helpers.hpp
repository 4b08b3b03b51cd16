#pragma once

#include <random>
#include <vector>

#include "fcalc/algebra.hpp"

namespace fcalc::testing {

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Multivector random_multivector(const Algebra& alg, std::mt19937_64& g,
                                      double scale = 1.0) {
  Multivector m(alg);
  for (int i = 0; i < alg.dim(); ++i) m[i] = uniform(g, -scale, scale);
  return m;
}

inline Paravector random_paravector(const Algebra& alg, std::mt19937_64& g,
                                    double scale = 1.0) {
  std::vector<double> p(static_cast<size_t>(alg.units() + 1));
  for (auto& v : p) v = uniform(g, -scale, scale);
  return {alg, std::move(p)};
}

inline ImaginaryUnit random_unit(const Algebra& alg, std::mt19937_64& g) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> u(static_cast<size_t>(alg.units()));
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (auto& v : u) {
      v = nd(g);
      n2 += v * v;
    }
  } while (n2 < 1e-6);
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& v : u) v *= inv;
  return {alg, std::move(u)};
}

}  // namespace fcalc::testing
