#include <gtest/gtest.h>

#include <cmath>

#include "trispec/geometry.hpp"

using namespace trispec;

TEST(Canonicalize, ScaledRightIsosceles) {
  Canonical c = canonicalize(Point::from_double(0, 0), Point::from_double(2, 0), Point::from_double(1, 1));
  EXPECT_NEAR(c.param.p_mid(), 0.5, 1e-15);
  EXPECT_NEAR(c.param.q_mid(), 0.5, 1e-15);
  EXPECT_NEAR(c.scale.mid_d(), 2.0, 1e-15);
}

TEST(Canonicalize, ReflectsApexAndPicksLongestSide) {
  // longest side from (0,0) to (0,3); apex (1,0.5) projects near the start
  Canonical c = canonicalize(Point::from_double(0, 0), Point::from_double(1, 0.5), Point::from_double(0, 3));
  EXPECT_GE(c.param.p_mid(), 0.5);
  EXPECT_NEAR(c.scale.mid_d(), 3.0, 1e-14);
  EXPECT_NEAR(c.param.q_mid(), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(c.param.p_mid(), 1 - 0.5 / 3.0, 1e-14);
}

TEST(Canonicalize, InvariantUnderVertexOrder) {
  Point a = Point::from_double(0.3, -0.2), b = Point::from_double(2.1, 0.4), c = Point::from_double(1.0, 1.7);
  Canonical x = canonicalize(a, b, c), y = canonicalize(c, a, b), z = canonicalize(b, a, c);
  EXPECT_NEAR(x.param.p_mid(), y.param.p_mid(), 1e-14);
  EXPECT_NEAR(x.param.q_mid(), z.param.q_mid(), 1e-14);
}

TEST(Canonicalize, Degenerate) {
  EXPECT_THROW(canonicalize(Point::from_double(0, 0), Point::from_double(1, 0), Point::from_double(2, 0)),
               DegenerateTriangle);
  EXPECT_THROW(require_nondegenerate(TriangleParam::from_double(0.5, 0)), DegenerateTriangle);
}

TEST(Classify, Classes) {
  EXPECT_EQ(classify(TriangleParam::from_double(0.5, 0.5)), TriangleClass::RIGHT);
  EXPECT_EQ(classify(TriangleParam::exact(mpq_class(1, 2), mpq_class(1, 2))), TriangleClass::RIGHT);
  EXPECT_EQ(classify(TriangleParam::from_double(0.7, 0.2)), TriangleClass::OBTUSE);
  EXPECT_EQ(classify(TriangleParam::from_double(0.5, std::sqrt(3.0) / 2)), TriangleClass::ACUTE);
}

TEST(AreaLabel, Regions) {
  EXPECT_EQ(area_label(TriangleParam::from_double(0.55, 0.3)), AreaLabel::I);
  EXPECT_EQ(area_label(TriangleParam::from_double(0.8, 0.3)), AreaLabel::II);
  EXPECT_EQ(area_label(TriangleParam::from_double(0.95, 0.17)), AreaLabel::III);
  EXPECT_EQ(area_label(TriangleParam::from_double(0.7, 0.1)), AreaLabel::IV);
  EXPECT_EQ(area_label(TriangleParam::from_double(0.6, 0.8)), AreaLabel::ACUTE);
}

TEST(AreaLabel, BoundaryGoesToFirstRegion) {
  // q = 0.156 exactly belongs to Areas I and IV; p = 0.65 to Areas I and II.
  EXPECT_EQ(area_label(TriangleParam::decimal("0.6", "0.156")), AreaLabel::I);
  EXPECT_EQ(area_label(TriangleParam::decimal("0.65", "0.3")), AreaLabel::I);
}

TEST(Geometry, AnglesAndAltitudes) {
  TriangleParam t = TriangleParam::from_double(0.5, 0.5);
  auto ang = angles(t);
  double sum = 0;
  for (const auto& a : ang) sum += a.mid_d();
  EXPECT_NEAR(sum, M_PI, 1e-14);
  auto h = altitudes(t);
  EXPECT_NEAR(h[0].mid_d(), 0.5, 1e-14);
  TriangleGeometry g = geometry(t);
  EXPECT_NEAR(g.area.mid_d(), 0.25, 1e-15);
  EXPECT_NEAR(g.d.mid_d(), 1.0, 1e-15);
}
