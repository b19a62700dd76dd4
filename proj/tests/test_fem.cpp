#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include <Eigen/SparseCholesky>

#include "trispec/fem/eigensolver.hpp"
#include "trispec/lambda1_bounds.hpp"
#include "trispec/lambda2_bounds.hpp"

using namespace trispec;
using namespace trispec::fem;

namespace {

const double kPi2 = M_PI * M_PI;
const double kRoot3 = std::sqrt(3.0);

// Uniform in the right/obtuse quarter-disc, by rejection.
std::vector<std::array<double, 2>> random_obtuse(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> up(0.5, 1.0), uq(0.0, 0.5);
  std::vector<std::array<double, 2>> out;
  while (static_cast<int>(out.size()) < n) {
    const double p = up(rng), q = uq(rng);
    if (q > 0.01 && (p - 0.5) * (p - 0.5) + q * q <= 0.25) out.push_back({p, q});
  }
  return out;
}

}  // namespace

TEST(Mesh, CountsPerLevel) {
  for (int level = 0; level <= 5; ++level) {
    Mesh m = build_mesh(0.7, 0.2, level);
    const std::size_t n = 1u << level;
    EXPECT_EQ(m.elements.size(), n * n);
    EXPECT_EQ(m.vertices.size(), (n + 1) * (n + 2) / 2);
    std::size_t boundary = 0;
    for (bool b : m.boundary) boundary += b;
    EXPECT_EQ(boundary, 3 * n);
  }
  EXPECT_EQ(build_mesh(0.7, 0.2, 0).interior_count(), 0u);
  EXPECT_EQ(build_mesh(0.7, 0.2, 1).interior_count(), 0u);
  EXPECT_EQ(build_mesh(0.7, 0.2, 2).interior_count(), 3u);
}

TEST(Mesh, NestedAndOriented) {
  Mesh coarse = build_mesh(0.6, 0.35, 3), fine = build_mesh(0.6, 0.35, 4);
  std::set<std::pair<long, long>> pts;
  for (const auto& v : fine.vertices) pts.insert({std::lround(v[0] * 1e9), std::lround(v[1] * 1e9)});
  for (const auto& v : coarse.vertices) {
    EXPECT_TRUE(pts.count({std::lround(v[0] * 1e9), std::lround(v[1] * 1e9)}));
  }
  double total = 0;
  for (const auto& e : fine.elements) {
    const auto &a = fine.vertices[e[0]], &b = fine.vertices[e[1]], &c = fine.vertices[e[2]];
    const double det = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
    EXPECT_GT(det, 0);
    total += det / 2;
  }
  EXPECT_NEAR(total, 0.35 / 2, 1e-14);
}

TEST(Mesh, Errors) {
  EXPECT_THROW(build_mesh(0.5, 0.5, 10), Error);
  EXPECT_THROW(build_mesh(0.5, 0.0, 3), DegenerateTriangle);
  EXPECT_THROW(smallest_two(build_mesh(0.5, 0.5, 1)), Error);
  EXPECT_THROW(assemble(build_mesh(0.5, 0.5, 1)), Error);
}

TEST(Assemble, LocalMatricesOfUnitRightTriangle) {
  Local l = local_matrices({0, 0}, {1, 0}, {0, 1});
  const double k[3][3] = {{1, -0.5, -0.5}, {-0.5, 0.5, 0}, {-0.5, 0, 0.5}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(l.stiffness[i][j], k[i][j], 1e-15);
      EXPECT_NEAR(l.mass[i][j], 0.5 / 12 * (i == j ? 2 : 1), 1e-15);
    }
  }
}

TEST(Assemble, StiffnessRowSumsVanish) {
  System s = assemble(build_mesh(0.8, 0.3, 3), true);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(s.stiffness.rows());
  EXPECT_LT((s.stiffness * ones).cwiseAbs().maxCoeff(), 1e-12);
  // total mass equals the area
  EXPECT_NEAR(ones.dot(s.mass * ones), 0.15, 1e-14);
}

TEST(Assemble, SymmetricPositiveDefinite) {
  System s = assemble(build_mesh(0.8, 0.3, 4));
  EXPECT_NEAR((SparseMatrix(s.stiffness.transpose()) - s.stiffness).norm(), 0, 1e-14);
  EXPECT_NEAR((SparseMatrix(s.mass.transpose()) - s.mass).norm(), 0, 1e-14);
  Eigen::SimplicialLLT<SparseMatrix> k(s.stiffness), m(s.mass);
  EXPECT_EQ(k.info(), Eigen::Success);
  EXPECT_EQ(m.info(), Eigen::Success);
}

TEST(Eigen, ResidualAndMassOrthogonality) {
  System s = assemble(build_mesh(0.7, 0.3, 5));
  EigenResult r = smallest_eigenpairs(s);
  ASSERT_EQ(r.values.size(), 2u);
  for (double res : r.residuals) EXPECT_LE(res, 1e-10);
  Eigen::MatrixXd g = r.vectors.transpose() * (s.mass * r.vectors);
  EXPECT_NEAR(g(0, 1), 0, 1e-8);
  EXPECT_NEAR(g(0, 0), 1, 1e-8);
  EXPECT_NEAR(g(1, 1), 1, 1e-8);
  EXPECT_LT(r.values[0], r.values[1]);
}

TEST(Eigen, ReferenceTrianglesLevelSix) {
  Spectrum eq = smallest_two(build_mesh(0.5, kRoot3 / 2, 6));
  EXPECT_GT(eq.lambda1, 16 * kPi2 / 3);
  EXPECT_LT(eq.lambda1, 1.01 * 16 * kPi2 / 3);
  Spectrum rt = smallest_two(build_mesh(0.5, 0.5, 6));
  EXPECT_GT(rt.lambda1, 10 * kPi2);
  EXPECT_LT(rt.lambda1, 1.01 * 10 * kPi2);
  Spectrum t30 = smallest_two(build_mesh(0.75, kRoot3 / 4, 6));
  EXPECT_NEAR(t30.ratio(), 13.0 / 7.0, 0.01 * 13.0 / 7.0);
}

TEST(Eigen, MonotoneInLevel) {
  double prev1 = 1e300, prev2 = 1e300;
  for (int level = 2; level <= 6; ++level) {
    Spectrum s = smallest_two(build_mesh(0.62, 0.41, level));
    EXPECT_LT(s.lambda1, prev1);
    EXPECT_LT(s.lambda2, prev2);
    prev1 = s.lambda1;
    prev2 = s.lambda2;
  }
}

TEST(Extrapolate, ExactForPureH2Error) {
  std::vector<Spectrum> levels;
  for (int level = 3; level <= 5; ++level) {
    const double e = std::pow(4.0, -level);
    levels.push_back({10 + e, 20 + 2 * e, level, std::nullopt, {}});
  }
  Spectrum s = extrapolate(levels);
  ASSERT_TRUE(s.extrapolated.has_value());
  EXPECT_NEAR((*s.extrapolated)[0], 10, 1e-14);
  EXPECT_NEAR((*s.extrapolated)[1], 20, 1e-14);
}

TEST(Extrapolate, NonMonotoneSkipped) {
  Spectrum a{10, 20, 3, std::nullopt, {}}, b{10.5, 19, 4, std::nullopt, {}};
  Spectrum s = extrapolate({a, b});
  EXPECT_FALSE(s.extrapolated.has_value());
  EXPECT_FALSE(s.warning.empty());
  EXPECT_THROW(extrapolate({a}), Error);
  EXPECT_THROW(extrapolate({a, Spectrum{9, 18, 5, std::nullopt, {}}}), Error);
}

TEST(Extrapolate, ReferenceRatios) {
  EXPECT_NEAR(oracle(0.5, kRoot3 / 2, 6).extrapolated_ratio(), 7.0 / 3.0, 1e-3 * 7.0 / 3.0);
  EXPECT_NEAR(oracle(0.5, 0.5, 6).extrapolated_ratio(), 2.0, 1e-3 * 2.0);
  EXPECT_NEAR(oracle(0.75, kRoot3 / 4, 6).extrapolated_ratio(), 13.0 / 7.0, 1e-3 * 13.0 / 7.0);
}

TEST(Sandwich, FemAboveCertifiedLambda1Lower) {
  for (const auto& [p, q] : random_obtuse(25, 11)) {
    Spectrum s = smallest_two(build_mesh(p, q, 4));
    const double lower = best_lower(TriangleParam::from_double(p, q, 64)).value.lo_d();
    EXPECT_LE(lower, s.lambda1) << p << " " << q;
  }
}

// Uniform refinement keeps the flat shape of every element, so very thin
// triangles need finer levels before the oracle is resolved.
TEST(Sandwich, ExtrapolatedLambda2BelowUpperPlusOnePercent) {
  int checked = 0;
  for (const auto& [p, q] : random_obtuse(100, 5)) {
    Spectrum s = oracle(p, q, q < 0.05 ? 8 : 6);
    ASSERT_TRUE(s.extrapolated.has_value());
    const double upper = best_upper(TriangleParam::from_double(p, q, 64)).value.hi_d();
    EXPECT_LE((*s.extrapolated)[1], 1.01 * upper) << p << " " << q;
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}
