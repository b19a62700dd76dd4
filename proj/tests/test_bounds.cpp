#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "trispec/certificate/transcription.hpp"
#include "trispec/lambda1_bounds.hpp"
#include "trispec/lambda2_bounds.hpp"
#include "trispec/rigor/expr.hpp"

using namespace trispec;

namespace {

const double kPi2 = M_PI * M_PI;

TriangleParam thirty_sixty() {
  return {Interval::from_rational(mpq_class(3, 4), 128), rigor::constants(128).sqrt3 / 4L};
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Lambda1, DiamHeightEquilateral) {
  TriangleParam t = TriangleParam::from_double(0.5, std::sqrt(3.0) / 2);
  BoundResult b = lower_diam_height(t);
  EXPECT_EQ(b.method, BoundMethod::DIAM_HEIGHT);
  EXPECT_NEAR(b.value.lo_d(), 45.822, 5e-4);
  // pi^2 (1 + 2/sqrt3)^2
  EXPECT_NEAR(b.value.mid_d(), kPi2 * std::pow(1 + 2 / std::sqrt(3.0), 2), 1e-10);
}

TEST(Lambda1, AngleBoundRightIsosceles) {
  TriangleParam t = TriangleParam::from_double(0.5, 0.5);
  BoundResult b = lower_angle(t);
  EXPECT_EQ(b.method, BoundMethod::ANGLE_BESSEL);
  EXPECT_NEAR(b.value.lo_d(), 90.45, 0.01);
  EXPECT_EQ(best_lower(t).method, BoundMethod::ANGLE_BESSEL);
}

TEST(Lambda1, AngleBoundOutOfRangeFallsBack) {
  TriangleParam t = TriangleParam::from_double(0.9, 0.02);
  EXPECT_THROW(lower_angle(t), OrderOutOfRange);
  EXPECT_EQ(best_lower(t).method, BoundMethod::DIAM_HEIGHT);
}

TEST(Lambda1, LowerBoundsBelowKnownEigenvalues) {
  // 45-45-90 with legs 1/sqrt2: lambda1 = 10 pi^2; equilateral side 1: 16 pi^2 / 3
  EXPECT_LT(best_lower(TriangleParam::from_double(0.5, 0.5)).value.hi_d(), 10 * kPi2);
  EXPECT_LT(best_lower(TriangleParam::from_double(0.5, std::sqrt(3.0) / 2)).value.hi_d(), 16 * kPi2 / 3);
  EXPECT_LT(best_lower(thirty_sixty()).value.hi_d(), 112 * kPi2 / 9);
}

TEST(Lambda2, TransplantExactAtReferenceShapes) {
  BoundResult t45 = transplant_upper(TriangleParam::exact(mpq_class(1, 2), mpq_class(1, 2)), Family::T45);
  EXPECT_LT(rel(t45.value.hi_d(), 20 * kPi2), 1e-10);
  BoundResult t30 = transplant_upper(thirty_sixty(), Family::T30);
  EXPECT_LT(rel(t30.value.hi_d(), 208 * kPi2 / 9), 1e-10);
  EXPECT_LT(t30.value.width(), 1e-25);
}

TEST(Lambda2, RectangleBound) {
  BoundResult r = rectangle_upper(TriangleParam::decimal("0.7", "0.156"));
  EXPECT_NEAR(r.value.hi_d(), 1262.18, 0.01);
  // independent of p
  EXPECT_NEAR(rectangle_upper(TriangleParam::decimal("0.9", "0.156")).value.mid_d(), r.value.mid_d(), 1e-9);
}

TEST(Lambda2, BestUpperPicksSmallest) {
  TriangleParam t = TriangleParam::from_double(0.5, 0.5);
  BoundResult b = best_upper(t);
  EXPECT_EQ(b.method, BoundMethod::TRANSPLANT_45);
  EXPECT_EQ(best_upper(TriangleParam::from_double(0.7, 0.05)).method, BoundMethod::RECTANGLE);
}

TEST(Lambda2, PencilMatchesDenseGeneralizedEigensolver) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> up(0.5, 0.95), uq(0.05, 0.45);
  for (int k = 0; k < 20; ++k) {
    const double p = up(rng), q = uq(rng);
    for (Family f : {Family::T45, Family::T30}) {
      RayleighCoefficients c = coeffs(TriangleParam::from_double(p, q), f);
      Eigen::Matrix2d g, m;
      g << c.A.mid_d(), c.B.mid_d(), c.B.mid_d(), c.C.mid_d();
      m << c.D.mid_d(), c.E.mid_d(), c.E.mid_d(), c.F.mid_d();
      Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix2d> es(g, m);
      Interval sup = pencil_sup(c);
      EXPECT_LT(rel(sup.mid_d(), es.eigenvalues()(1)), 1e-12);
      EXPECT_TRUE(sup.contains(es.eigenvalues()(1)) || sup.width() < 1e-20);
    }
  }
}

TEST(Lambda2, ClosedFormsAgreeWithTranscription) {
  const char* ids45[] = {"coeff.A45", "coeff.B45", "coeff.C45", "coeff.D45", "coeff.E45", "coeff.F45"};
  const char* ids30[] = {"coeff.A30", "coeff.B30", "coeff.C30", "coeff.D30", "coeff.E30", "coeff.F30"};
  for (auto [p, q] : {std::pair{0.7, 0.2}, std::pair{0.6, 0.3}, std::pair{0.55, 0.45}}) {
    for (Family f : {Family::T45, Family::T30}) {
      CoeffSet<double> c = coeffs_t(p, q, kPi2, f);
      const double vals[] = {c.A, c.B, c.C, c.D, c.E, c.F};
      rigor::Assignment env;
      env.emplace("p", Interval(p, 128));
      env.emplace("q", Interval(q, 128));
      for (int k = 0; k < 6; ++k) {
        const char* id = (f == Family::T45 ? ids45 : ids30)[k];
        double t = rigor::iv_eval(certificate::expr(id), env).mid_d();
        EXPECT_NEAR(vals[k], t, 1e-10 * std::max(1.0, std::abs(t))) << id;
      }
    }
  }
  EXPECT_DOUBLE_EQ(coeffs_t(0.8, 0.3, kPi2, Family::T45).D, 0.3 / 4);
  EXPECT_DOUBLE_EQ(coeffs_t(0.8, 0.3, kPi2, Family::T30).D, 3 * 0.3 / 8);
}

TEST(ReferenceEigenfunctions, ResidualAndBoundaryValues) {
  for (Family f : {Family::T45, Family::T30}) {
    const ReferenceFamily& ref = reference_family(f);
    const auto& v = ref.vertices;
    const double h = 1e-4;
    for (int which = 0; which < 2; ++which) {
      double scale = 0;
      for (double s : {0.2, 0.5}) {
        for (double t : {0.2, 0.3}) {
          // interior point s v1 + t v2 + (1 - s - t) v0
          const double x = v[0][0] + s * (v[1][0] - v[0][0]) + t * (v[2][0] - v[0][0]);
          const double y = v[0][1] + s * (v[1][1] - v[0][1]) + t * (v[2][1] - v[0][1]);
          const double u = ref.value(which, x, y);
          const double lap = (ref.value(which, x + h, y) + ref.value(which, x - h, y) + ref.value(which, x, y + h) +
                              ref.value(which, x, y - h) - 4 * u) /
                             (h * h);
          scale = std::max(scale, std::abs(ref.eigenvalue[which] * u));
          EXPECT_NEAR(lap + ref.eigenvalue[which] * u, 0, 1e-3 * std::max(1.0, std::abs(ref.eigenvalue[which] * u)))
              << to_string(f) << which;
          auto g = ref.gradient(which, x, y);
          const double gx = (ref.value(which, x + h, y) - ref.value(which, x - h, y)) / (2 * h);
          EXPECT_NEAR(g[0], gx, 1e-5 * std::max(1.0, std::abs(gx)));
        }
      }
      EXPECT_GT(scale, 1.0);
      for (int e = 0; e < 3; ++e) {
        const auto& a = v[e];
        const auto& b = v[(e + 1) % 3];
        for (double s : {0.1, 0.37, 0.8}) {
          EXPECT_NEAR(ref.value(which, a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])), 0, 1e-12);
        }
      }
    }
  }
}

TEST(RatioBound, RightAndObtuseSamples) {
  for (auto [p, q] : {std::pair{0.5, 0.5}, std::pair{0.6, 0.3}, std::pair{0.8, 0.35}, std::pair{0.95, 0.2},
                      std::pair{0.7, 0.1}}) {
    TriangleParam t = TriangleParam::from_double(p, q);
    Interval ratio = detail::hi_point(best_upper(t).value) / detail::lo_point(best_lower(t).value);
    EXPECT_LE(ratio.hi_d(), 7.0 / 3.0) << p << " " << q;
  }
}
