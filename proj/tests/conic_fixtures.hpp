#pragma once

#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "test_util.hpp"
#include "theta/conic.hpp"

namespace theta::test {

// Symmetric matrix of the product of two lines.
inline Conic::Matrix3 line_pair(const Hyperplane& l, const Hyperplane& m) {
  Conic::Matrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = Scalar(l[i] * m[j] + l[j] * m[i], 2);
  }
  for (auto& row : out) {
    for (auto& x : row) x.canonicalize();
  }
  return out;
}

inline Hyperplane chord(const ProjPoint& a, const ProjPoint& b) {
  const std::vector<ProjPoint> pts{a, b};
  return hyperplane_through(pts);
}

// Two nondegenerate members of the pencil through four points in general
// position: random combinations of the line pairs p0p1.p2p3 and p0p2.p1p3.
inline std::pair<Conic, Conic> conics_through(const std::vector<ProjPoint>& p, std::mt19937_64& rng) {
  const auto a = line_pair(chord(p[0], p[1]), chord(p[2], p[3]));
  const auto b = line_pair(chord(p[0], p[2]), chord(p[1], p[3]));
  std::uniform_int_distribution<long> d(-9, 9);
  auto member = [&]() {
    while (true) {
      const long s = d(rng), t = d(rng);
      if (s == 0 || t == 0) continue;
      Conic::Matrix3 m;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = Scalar(s) * a[i][j] + Scalar(t) * b[i][j];
      }
      Conic c(m);
      if (!c.is_degenerate()) return std::make_tuple(c, s, t);
    }
  };
  while (true) {
    auto [c1, s1, t1] = member();
    auto [c2, s2, t2] = member();
    // The two line pairs are independent, so members are proportional
    // exactly when their weights are.
    if (s1 * t2 != s2 * t1) return {c1, c2};
  }
}

// Four rational points of P^2 in general position.
inline std::vector<ProjPoint> random_quadrangle(std::mt19937_64& rng, long height) {
  while (true) {
    std::vector<ProjPoint> p;
    for (int i = 0; i < 4; ++i) p.emplace_back(random_vector(rng, 3, height));
    if (in_general_position(p, 2)) return p;
  }
}

}  // namespace theta::test
