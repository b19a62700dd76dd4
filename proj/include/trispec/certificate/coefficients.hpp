#pragma once

// Independent check of the twelve Rayleigh coefficient formulas: the defining
// integrals of the transplanted eigenfunctions are pulled back to the
// reference triangle and integrated with a tensor Gauss rule on the collapsed
// square.

#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "trispec/certificate/report.hpp"
#include "trispec/certificate/transcription.hpp"
#include "trispec/lambda2_bounds.hpp"

namespace trispec::certificate {

// A, B, C, D, E, F in that order.
using CoefficientValues = std::array<double, 6>;

inline CoefficientValues quadrature_coefficients(Family fam, double p, double q) {
  const ReferenceFamily& ref = reference_family(fam);
  const Affine L = transplant_map(ref, p, q);
  const double det_m = std::abs(L.m[0][0] * L.m[1][1] - L.m[0][1] * L.m[1][0]);
  const auto& v0 = ref.vertices[0];
  const auto& v1 = ref.vertices[1];
  const auto& v2 = ref.vertices[2];
  const double e1x = v1[0] - v0[0], e1y = v1[1] - v0[1];
  const double e2x = v2[0] - v0[0], e2y = v2[1] - v0[1];
  const double det_ref = std::abs(e1x * e2y - e1y * e2x);

  using Rule = boost::math::quadrature::gauss<double, 30>;
  CoefficientValues out{};
  for (int k = 0; k < 6; ++k) {
    auto integrand = [&](double u, double v) {
      const double x = v0[0] + u * e1x + v * (1 - u) * e2x;
      const double y = v0[1] + u * e1y + v * (1 - u) * e2y;
      auto grad = [&](int which) {
        auto g = ref.gradient(which, x, y);
        // grad_x (phi o L) = M^T grad phi
        return std::array<double, 2>{L.m[0][0] * g[0] + L.m[1][0] * g[1], L.m[0][1] * g[0] + L.m[1][1] * g[1]};
      };
      double val = 0;
      switch (k) {
        case 0: {
          auto g = grad(0);
          val = g[0] * g[0] + g[1] * g[1];
          break;
        }
        case 1: {
          auto g1 = grad(0), g2 = grad(1);
          val = g1[0] * g2[0] + g1[1] * g2[1];
          break;
        }
        case 2: {
          auto g = grad(1);
          val = g[0] * g[0] + g[1] * g[1];
          break;
        }
        case 3: val = std::pow(ref.value(0, x, y), 2); break;
        case 4: val = ref.value(0, x, y) * ref.value(1, x, y); break;
        case 5: val = std::pow(ref.value(1, x, y), 2); break;
      }
      return val * det_ref * (1 - u);
    };
    const double total = Rule::integrate(
        [&](double u) { return Rule::integrate([&](double v) { return integrand(u, v); }, 0.0, 1.0); }, 0.0, 1.0);
    out[k] = total / det_m;
  }
  return out;
}

inline CoefficientValues printed_coefficients(Family fam, double p, double q) {
  static const char* names[2][6] = {{"coeff.A45", "coeff.B45", "coeff.C45", "coeff.D45", "coeff.E45", "coeff.F45"},
                                    {"coeff.A30", "coeff.B30", "coeff.C30", "coeff.D30", "coeff.E30", "coeff.F30"}};
  const int row = fam == Family::T45 ? 0 : 1;
  rigor::Assignment env;
  env.emplace("p", Interval(p, 128));
  env.emplace("q", Interval(q, 128));
  CoefficientValues out{};
  for (int k = 0; k < 6; ++k) out[k] = rigor::iv_eval(expr(names[row][k]), env, 128).mid_d();
  return out;
}

struct CoefficientCheckOptions {
  int n_points = 5;
  double tol = 1e-8;       // relative, for A, B, C, D, F
  double e_tol = 1e-10;    // absolute, for E
  std::uint64_t seed = 20240607;
};

// Random right/obtuse (p, q), bounded away from degeneracy.
inline std::vector<std::array<double, 2>> coefficient_sample_points(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> up(0.5, 0.95);
  std::uniform_real_distribution<double> ut(0.1, 1.0);
  std::vector<std::array<double, 2>> pts;
  for (int i = 0; i < n; ++i) {
    const double p = up(rng);
    const double qmax = std::sqrt(0.25 - (p - 0.5) * (p - 0.5));
    pts.push_back({p, ut(rng) * qmax});
  }
  return pts;
}

// Relative error against max(|quadrature|, 1), so that coefficients passing
// through zero (B vanishes at the reference shape) are judged on scale.
inline ProofStep verify_coefficient_formulas(const CoefficientCheckOptions& opt = {}) {
  static const char* letters = "ABCDEF";
  ProofStep step;
  step.id = "coefficients.quadrature";
  step.kind = StepKind::COEFFICIENT_CROSSCHECK;
  step.claim = "all twelve printed Rayleigh coefficient formulas agree with quadrature of their defining integrals";
  if (opt.n_points < 1) throw Error("n_points must be at least 1");
  bool ok = true;
  std::ostringstream os;
  os << opt.n_points << " points, seed " << opt.seed << ", tol " << opt.tol << " relative, E tol " << opt.e_tol;
  for (Family fam : {Family::T45, Family::T30}) {
    std::array<double, 6> worst{};
    for (const auto& [p, q] : coefficient_sample_points(opt.n_points, opt.seed)) {
      const CoefficientValues quad = quadrature_coefficients(fam, p, q);
      const CoefficientValues printed = printed_coefficients(fam, p, q);
      for (int k = 0; k < 6; ++k) {
        double err;
        bool good;
        if (k == 4) {
          err = std::max(std::abs(quad[k]), std::abs(printed[k]));
          good = err <= opt.e_tol;
        } else {
          err = std::abs(printed[k] - quad[k]) / std::max(std::abs(quad[k]), 1.0);
          good = err <= opt.tol;
        }
        worst[k] = std::max(worst[k], err);
        if (!good) {
          ok = false;
          os << "; mismatch " << letters[k] << to_string(fam) + 1 << " at (" << p << ", " << q << "): printed "
             << printed[k] << ", quadrature " << quad[k];
        }
      }
    }
    for (int k = 0; k < 6; ++k) {
      Interval w(worst[k], 64);
      step.anchors.push_back(make_anchor(std::string(k == 4 ? "max |" : "max relative error ") + letters[k] +
                                             (to_string(fam) + 1) + (k == 4 ? "|" : ""),
                                         w));
    }
  }
  step.detail = os.str();
  step.verdict = ok ? Verdict::PASS : Verdict::FAIL;
  return step;
}

}  // namespace trispec::certificate
