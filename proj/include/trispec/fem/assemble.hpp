#pragma once

// P1 stiffness and mass matrices restricted to interior vertices.

#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Sparse>

#include "trispec/fem/mesh.hpp"

namespace trispec::fem {

using SparseMatrix = Eigen::SparseMatrix<double>;
using LocalMatrix = std::array<std::array<double, 3>, 3>;

struct Local {
  LocalMatrix stiffness;
  LocalMatrix mass;
};

inline Local local_matrices(const std::array<double, 2>& a, const std::array<double, 2>& b,
                            const std::array<double, 2>& c) {
  const double det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
  const double area = std::abs(det) / 2;
  // gradients of the barycentric coordinates times det
  const std::array<std::array<double, 2>, 3> g = {{{b[1] - c[1], c[0] - b[0]},
                                                   {c[1] - a[1], a[0] - c[0]},
                                                   {a[1] - b[1], b[0] - a[0]}}};
  Local l;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      l.stiffness[i][j] = (g[i][0] * g[j][0] + g[i][1] * g[j][1]) / (4 * area);
      l.mass[i][j] = area / 12 * (i == j ? 2 : 1);
    }
  }
  return l;
}

struct System {
  SparseMatrix stiffness;
  SparseMatrix mass;
  std::vector<int> dof;  // vertex -> interior index, -1 on the boundary
};

// With all_dofs the boundary vertices are kept, which is only useful for
// checking row sums.
inline System assemble(const Mesh& m, bool all_dofs = false) {
  System s;
  s.dof.assign(m.vertices.size(), -1);
  int n = 0;
  for (std::size_t v = 0; v < m.vertices.size(); ++v) {
    if (all_dofs || !m.boundary[v]) s.dof[v] = n++;
  }
  if (n == 0) throw Error("mesh too coarse");
  std::vector<Eigen::Triplet<double>> kt, mt;
  kt.reserve(9 * m.elements.size());
  mt.reserve(9 * m.elements.size());
  for (const auto& e : m.elements) {
    const Local l = local_matrices(m.vertices[e[0]], m.vertices[e[1]], m.vertices[e[2]]);
    for (int i = 0; i < 3; ++i) {
      const int r = s.dof[e[i]];
      if (r < 0) continue;
      for (int j = 0; j < 3; ++j) {
        const int c = s.dof[e[j]];
        if (c < 0) continue;
        kt.emplace_back(r, c, l.stiffness[i][j]);
        mt.emplace_back(r, c, l.mass[i][j]);
      }
    }
  }
  s.stiffness.resize(n, n);
  s.mass.resize(n, n);
  s.stiffness.setFromTriplets(kt.begin(), kt.end());
  s.mass.setFromTriplets(mt.begin(), mt.end());
  return s;
}

}  // namespace trispec::fem
