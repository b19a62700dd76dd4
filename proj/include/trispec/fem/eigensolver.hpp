#pragma once

// Smallest Dirichlet eigenvalues of the P1 discretization by block inverse
// (subspace) iteration with Rayleigh-Ritz, plus Richardson extrapolation.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>

#include "trispec/fem/assemble.hpp"

namespace trispec::fem {

struct EigenOptions {
  int count = 2;
  int block = 6;
  double tol = 1e-10;
  int max_iterations = 500;
  unsigned seed = 7;
};

struct EigenResult {
  std::vector<double> values;
  std::vector<double> residuals;  // |Kx - lambda Mx| / (lambda |Mx|)
  Eigen::MatrixXd vectors;        // mass-orthonormal columns
  int iterations = 0;
};

inline EigenResult smallest_eigenpairs(const System& s, const EigenOptions& opt = {}) {
  const int n = static_cast<int>(s.stiffness.rows());
  if (n < opt.count) throw Error("mesh too coarse");
  const int b = std::min(n, std::max(opt.block, opt.count));
  Eigen::SimplicialLDLT<SparseMatrix> solver(s.stiffness);
  if (solver.info() != Eigen::Success) throw EvaluationError("stiffness factorization failed");

  std::mt19937 rng(opt.seed);
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::MatrixXd x(n, b);
  for (int j = 0; j < b; ++j) {
    for (int i = 0; i < n; ++i) x(i, j) = u(rng);
  }

  EigenResult r;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    Eigen::MatrixXd y = solver.solve(s.mass * x);
    Eigen::MatrixXd ky = s.stiffness * y, my = s.mass * y;
    Eigen::MatrixXd kr = y.transpose() * ky, mr = y.transpose() * my;
    kr = (kr + kr.transpose()) / 2;
    mr = (mr + mr.transpose()) / 2;
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ritz(kr, mr);
    if (ritz.info() != Eigen::Success) throw EvaluationError("Rayleigh-Ritz step failed");
    x = y * ritz.eigenvectors();
    r.values.assign(ritz.eigenvalues().data(), ritz.eigenvalues().data() + opt.count);
    r.residuals.clear();
    bool done = true;
    for (int k = 0; k < opt.count; ++k) {
      Eigen::VectorXd mx = s.mass * x.col(k);
      const double res = (s.stiffness * x.col(k) - r.values[k] * mx).norm() / (std::abs(r.values[k]) * mx.norm());
      r.residuals.push_back(res);
      done = done && res <= opt.tol;
    }
    r.iterations = it;
    if (done) {
      r.vectors = x.leftCols(opt.count);
      return r;
    }
  }
  throw EvaluationError("eigensolver did not converge, residual " + std::to_string(r.residuals.back()));
}

struct Spectrum {
  double lambda1 = 0;
  double lambda2 = 0;
  int level = 0;
  std::optional<std::array<double, 2>> extrapolated;
  std::string warning;

  double ratio() const { return lambda2 / lambda1; }
  double extrapolated_ratio() const { return extrapolated ? (*extrapolated)[1] / (*extrapolated)[0] : ratio(); }
};

inline Spectrum smallest_two(const Mesh& m, const EigenOptions& opt = {}) {
  if (m.interior_count() < 2) throw Error("mesh too coarse");
  EigenResult r = smallest_eigenpairs(assemble(m), opt);
  return {r.values[0], r.values[1], m.level, std::nullopt, {}};
}

// Richardson h^2 extrapolation from the last two levels.
inline Spectrum extrapolate(const std::vector<Spectrum>& levels) {
  if (levels.size() < 2) throw Error("extrapolation needs at least two levels");
  const Spectrum& prev = levels[levels.size() - 2];
  Spectrum out = levels.back();
  if (out.level != prev.level + 1) throw Error("extrapolation needs consecutive levels");
  if (out.lambda1 > prev.lambda1 || out.lambda2 > prev.lambda2) {
    out.warning = "non-monotone sequence, extrapolation skipped";
    return out;
  }
  out.extrapolated = std::array<double, 2>{out.lambda1 + (out.lambda1 - prev.lambda1) / 3,
                                           out.lambda2 + (out.lambda2 - prev.lambda2) / 3};
  return out;
}

// Levels level-1 and level, extrapolated when requested and possible.
inline Spectrum oracle(double p, double q, int level, bool extrap = true) {
  Spectrum fine = smallest_two(build_mesh(p, q, level));
  if (!extrap || level < 1) return fine;
  Spectrum coarse;
  try {
    coarse = smallest_two(build_mesh(p, q, level - 1));
  } catch (const Error&) {
    fine.warning = "coarser level too small, extrapolation skipped";
    return fine;
  }
  return extrapolate({coarse, fine});
}

}  // namespace trispec::fem
