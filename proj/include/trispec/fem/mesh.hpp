#pragma once

// Uniformly refined meshes of one triangle. Level L splits every side into
// 2^L segments and keeps the barycentric lattice, so meshes are nested.

#include <array>
#include <vector>

#include "trispec/error.hpp"
#include "trispec/geometry.hpp"

namespace trispec::fem {

inline constexpr int kMaxLevel = 9;

struct Mesh {
  std::vector<std::array<double, 2>> vertices;
  std::vector<std::array<int, 3>> elements;  // counterclockwise
  std::vector<bool> boundary;
  int level = 0;

  std::size_t interior_count() const {
    std::size_t n = 0;
    for (bool b : boundary) n += !b;
    return n;
  }
};

inline Mesh build_mesh(double p, double q, int level) {
  if (level < 0 || level > kMaxLevel) throw Error("refinement level must be in [0, 9]");
  if (!(q > kDegenerateQ)) throw DegenerateTriangle();
  const int n = 1 << level;
  Mesh m;
  m.level = level;
  // lattice point (i, j) sits at (i/n) (1, 0) + (j/n) (p, q)
  std::vector<int> index((n + 1) * (n + 1), -1);
  auto id = [&](int i, int j) { return index[i * (n + 1) + j]; };
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i + j <= n; ++i) {
      index[i * (n + 1) + j] = static_cast<int>(m.vertices.size());
      const double s = static_cast<double>(i) / n, t = static_cast<double>(j) / n;
      m.vertices.push_back({s + t * p, t * q});
      m.boundary.push_back(i == 0 || j == 0 || i + j == n);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i + j < n; ++i) {
      m.elements.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
      if (i + j + 1 < n) m.elements.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return m;
}

inline Mesh build_mesh(const TriangleParam& t, int level) {
  require_nondegenerate(t);
  return build_mesh(t.p_mid(), t.q_mid(), level);
}

}  // namespace trispec::fem
