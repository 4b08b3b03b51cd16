#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fcalc/algebra.hpp"
#include "test_helpers.hpp"

using namespace fcalc;
using fcalc::testing::random_multivector;
using fcalc::testing::random_paravector;
using fcalc::testing::random_unit;
using fcalc::testing::rng;

namespace {

// Independent sign oracle: multiply blades symbol by symbol, applying only
// the two rewrite rules e_i e_j = -e_j e_i (i != j) and e_i e_i = -1.
struct SymbolicBlade {
  std::vector<int> factors;
  int sign = 1;
};

SymbolicBlade symbolic_product(unsigned a, unsigned b, int n) {
  SymbolicBlade r;
  for (int i = 0; i < n; ++i)
    if (a & (1u << i)) r.factors.push_back(i);
  for (int i = 0; i < n; ++i)
    if (b & (1u << i)) r.factors.push_back(i);
  // Bubble to canonical ascending order, one rewrite at a time.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < r.factors.size(); ++k) {
      if (r.factors[k] > r.factors[k + 1]) {
        std::swap(r.factors[k], r.factors[k + 1]);
        r.sign = -r.sign;
        changed = true;
      } else if (r.factors[k] == r.factors[k + 1]) {
        r.factors.erase(r.factors.begin() + static_cast<long>(k),
                        r.factors.begin() + static_cast<long>(k) + 2);
        r.sign = -r.sign;
        changed = true;
        break;
      }
    }
  }
  return r;
}

unsigned symbolic_mask(const SymbolicBlade& b) {
  unsigned m = 0;
  for (int f : b.factors) m |= 1u << f;
  return m;
}

}  // namespace

TEST_CASE("blade products match the symbolic rewrite oracle", "[algebra]") {
  for (int n : {1, 2, 3, 4, 5}) {
    Algebra alg = Algebra::clifford(n);
    const int dim = alg.dim();
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        auto got = alg.basis_product(a, b);
        auto want = symbolic_product(static_cast<unsigned>(a), static_cast<unsigned>(b), n);
        REQUIRE(static_cast<unsigned>(got.index) == symbolic_mask(want));
        REQUIRE(got.sign == static_cast<double>(want.sign));
      }
    }
  }
}

TEST_CASE("anticommutation e_i e_j + e_j e_i = -2 delta_ij", "[algebra]") {
  for (int n : {1, 3, 5}) {
    Algebra alg = Algebra::clifford(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        Multivector ei = Multivector::basis(alg, alg.paravector_index(i));
        Multivector ej = Multivector::basis(alg, alg.paravector_index(j));
        Multivector anti = ei * ej + ej * ei;
        Multivector want = Multivector::scalar(alg, i == j ? -2.0 : 0.0);
        REQUIRE((anti - want).norm() == 0.0);
      }
    }
  }
}

TEST_CASE("geometric product is associative and unital", "[algebra]") {
  for (int n : {1, 2, 3, 5}) {
    Algebra alg = Algebra::clifford(n);
    auto g = rng(7 + static_cast<uint64_t>(n));
    const Multivector one = Multivector::scalar(alg, 1.0);
    for (int t = 0; t < 1000; ++t) {
      Multivector a = random_multivector(alg, g);
      Multivector b = random_multivector(alg, g);
      Multivector c = random_multivector(alg, g);
      const double scale = std::max(1.0, a.norm() * b.norm() * c.norm());
      REQUIRE(((a * b) * c - a * (b * c)).norm() <= 1e-12 * scale);
      REQUIRE((one * a - a).norm() == 0.0);
      REQUIRE((a * one - a).norm() == 0.0);
    }
  }
}

TEST_CASE("bivector square (e1 e2)^2 = -1", "[algebra]") {
  Algebra alg = Algebra::clifford(3);
  Multivector e12 = Multivector::basis(alg, 0b011);
  REQUIRE((e12 * e12 - Multivector::scalar(alg, -1.0)).norm() == 0.0);
}

TEST_CASE("paravector conjugation and norm", "[algebra]") {
  Algebra alg = Algebra::clifford(3);
  Paravector real3(alg, {3, 0, 0, 0});
  REQUIRE(real3.conjugate().parts() == std::vector<double>{3, 0, 0, 0});

  Paravector x(alg, {1, 2, 0, -1});
  REQUIRE(x.conjugate().parts() == std::vector<double>{1, -2, 0, 1});

  auto g = rng(11);
  for (int t = 0; t < 50; ++t) {
    Paravector y = random_paravector(alg, g, 2.0);
    Multivector prod = y * y.conjugate();
    REQUIRE(std::abs(prod.scalar_part() - y.norm2()) <= 1e-12 * std::max(1.0, y.norm2()));
    Multivector offscalar = prod - Multivector::scalar(alg, prod.scalar_part());
    REQUIRE(offscalar.norm() <= 1e-12 * std::max(1.0, y.norm2()));
  }
}

TEST_CASE("paravector inverse", "[algebra]") {
  Algebra alg = Algebra::clifford(3);
  REQUIRE(Paravector(alg, {1, 0, 0, 0}).inverse().parts() ==
          std::vector<double>{1, 0, 0, 0});
  REQUIRE(Paravector(alg, {0, 1, 0, 0}).inverse().parts() ==
          std::vector<double>{0, -1, 0, 0});
  REQUIRE_THROWS_AS(Paravector::zero(alg).inverse(), SingularityError);

  auto g = rng(13);
  for (int t = 0; t < 50; ++t) {
    Paravector y = random_paravector(alg, g, 2.0);
    if (y.norm() < 0.1) continue;
    Multivector prod = y * y.inverse();
    REQUIRE((prod - Multivector::scalar(alg, 1.0)).norm() <= 1e-14 * std::max(1.0, y.norm()));
  }
}

TEST_CASE("sphere_of and plane membership", "[algebra]") {
  Algebra alg = Algebra::clifford(3);
  SpectralSphere s5 = sphere_of(Paravector(alg, {5, 0, 0, 0}));
  REQUIRE(s5.center == 5.0);
  REQUIRE(s5.radius == 0.0);

  SpectralSphere s = sphere_of(Paravector(alg, {1, 3, 4, 0}));
  REQUIRE(s.center == 1.0);
  REQUIRE(s.radius == Catch::Approx(5.0));

  auto g = rng(17);
  for (int t = 0; t < 20; ++t) {
    Paravector x = random_paravector(alg, g, 2.0);
    SpectralSphere sx = sphere_of(x);
    ImaginaryUnit I = random_unit(alg, g);
    Paravector y = embed_in_plane(sx.center, sx.radius, I);
    REQUIRE(sx.contains(y.real_part(), y.vec_norm(), 1e-12));
  }
}

TEST_CASE("embed_in_plane", "[algebra]") {
  Algebra alg = Algebra::clifford(3);
  ImaginaryUnit e1 = ImaginaryUnit::axis(alg, 1);
  REQUIRE(embed_in_plane(2.5, 0.0, e1).parts() == std::vector<double>{2.5, 0, 0, 0});
  REQUIRE(embed_in_plane(0.0, 1.0, e1).parts() == std::vector<double>{0, 1, 0, 0});

  auto g = rng(19);
  for (int t = 0; t < 20; ++t) {
    ImaginaryUnit I = random_unit(alg, g);
    double u = fcalc::testing::uniform(g, -2, 2), v = fcalc::testing::uniform(g, -2, 2);
    Multivector prod = embed_in_plane(u, v, I) * embed_in_plane(u, -v, I);
    REQUIRE(std::abs(prod.scalar_part() - (u * u + v * v)) <= 1e-12);
    REQUIRE((prod - Multivector::scalar(alg, prod.scalar_part())).norm() <= 1e-12);
  }
}

TEST_CASE("products of plane elements stay in the plane", "[algebra]") {
  for (int n : {3, 5}) {
    Algebra alg = Algebra::clifford(n);
    auto g = rng(23 + static_cast<uint64_t>(n));
    for (int t = 0; t < 50; ++t) {
      ImaginaryUnit I = random_unit(alg, g);
      Multivector a = embed_in_plane(fcalc::testing::uniform(g, -2, 2),
                                     fcalc::testing::uniform(g, -2, 2), I)
                          .to_multivector();
      Multivector b = embed_in_plane(fcalc::testing::uniform(g, -2, 2),
                                     fcalc::testing::uniform(g, -2, 2), I)
                          .to_multivector();
      REQUIRE((a * b).off_plane_norm(I) <= 1e-14 * std::max(1.0, a.norm() * b.norm()));
    }
  }
}

TEST_CASE("quaternion backend obeys i^2 = j^2 = k^2 = ijk = -1", "[algebra][quaternion]") {
  Algebra H = Algebra::quaternion();
  Multivector one = Multivector::scalar(H, 1.0);
  Multivector i = Multivector::basis(H, 1);
  Multivector j = Multivector::basis(H, 2);
  Multivector k = Multivector::basis(H, 3);
  REQUIRE((i * i + one).norm() == 0.0);
  REQUIRE((j * j + one).norm() == 0.0);
  REQUIRE((k * k + one).norm() == 0.0);
  REQUIRE((i * j * k + one).norm() == 0.0);
  REQUIRE((i * j - k).norm() == 0.0);
  REQUIRE((j * k - i).norm() == 0.0);
  REQUIRE((k * i - j).norm() == 0.0);
  REQUIRE((j * i + k).norm() == 0.0);

  // |q|^2 = q conj(q) = conj(q) q.
  auto g = rng(29);
  for (int t = 0; t < 100; ++t) {
    Paravector q = random_paravector(H, g, 2.0);
    Multivector lhs = q * q.conjugate();
    Multivector rhs = q.conjugate() * q;
    REQUIRE(std::abs(lhs.scalar_part() - q.norm2()) <= 1e-13 * std::max(1.0, q.norm2()));
    REQUIRE((lhs - rhs).norm() <= 1e-13 * std::max(1.0, q.norm2()));
  }
}

TEST_CASE("unit 1-vectors square to -1", "[algebra]") {
  for (auto alg : {Algebra::clifford(3), Algebra::clifford(5), Algebra::quaternion()}) {
    auto g = rng(31);
    for (int t = 0; t < 20; ++t) {
      ImaginaryUnit I = random_unit(alg, g);
      Multivector sq = I.to_multivector() * I.to_multivector();
      REQUIRE((sq - Multivector::scalar(alg, -1.0)).norm() <= 1e-14);
    }
  }
}

TEST_CASE("mismatched algebras are rejected", "[algebra]") {
  Multivector a(Algebra::clifford(3));
  Multivector b(Algebra::clifford(5));
  REQUIRE_THROWS_AS(a * b, DimensionError);
  REQUIRE_THROWS_AS(a + Multivector(Algebra::quaternion()), DimensionError);
}
