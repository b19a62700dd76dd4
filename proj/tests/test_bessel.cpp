#include <gtest/gtest.h>

#include <cmath>

#include <boost/math/special_functions/bessel.hpp>

#include "trispec/bessel.hpp"

using namespace trispec;
using rigor::Interval;

TEST(BesselJ, MatchesBoostAtSamplePoints) {
  for (double nu : {0.0, 0.5, 2.0, 7.25, 13.0, 20.5}) {
    for (double x : {0.5, 3.0, 9.0, 21.0}) {
      Interval v = bessel::bessel_j(nu, Interval(x, 128));
      const double ref = boost::math::cyl_bessel_j(nu, x);
      EXPECT_NEAR(v.mid_d(), ref, 1e-12 * std::max(1.0, std::abs(ref))) << nu << " " << x;
      EXPECT_LT(v.width(), 1e-20);
    }
  }
}

TEST(BesselZero, J0) {
  bessel::BesselZeroEnclosure z = bessel::first_zero(0.0);
  EXPECT_TRUE(z.z.subset_of(2.404, 2.406));
  EXPECT_TRUE(z.z.contains(2.404825557695773));
  EXPECT_LE(z.z.width(), 1e-10);
}

TEST(BesselZero, HalfOrderIsPi) {
  // J_{1/2}(x) is proportional to sin(x)/sqrt(x)
  Interval half = Interval::from_rational(mpq_class(1, 2), 128);
  bessel::BesselZeroEnclosure z = bessel::first_zero(half, 1e-12);
  EXPECT_NEAR(z.z.mid_d(), M_PI, 1e-10);
  EXPECT_TRUE(z.z.contains(M_PI));
}

TEST(BesselZero, OrdersTwelveAndThirteen) {
  Interval j12 = bessel::first_zero(12.0).z;
  Interval j13 = bessel::first_zero(13.0).z;
  EXPECT_LE(j13.hi_d(), 17.802);
  Interval gap = j13 - j12;
  EXPECT_TRUE(gap.subset_of(1.05, 1.15));
  EXPECT_NEAR(j13.mid_d(), boost::math::cyl_bessel_j_zero(13.0, 1), 1e-9);
}

TEST(BesselZero, SignChangeAcrossEnclosure) {
  for (double nu : {1.0, 4.0, 11.5, 25.0}) {
    bessel::BesselZeroEnclosure z = bessel::first_zero(nu);
    Interval lo = bessel::bessel_j(nu, Interval::point(z.z.lo(), 128));
    Interval hi = bessel::bessel_j(nu, Interval::point(z.z.hi(), 128));
    EXPECT_TRUE(lo.certainly_positive()) << nu;
    EXPECT_TRUE(hi.certainly_nonpositive()) << nu;
  }
}

TEST(BesselZero, IncreasingInOrder) {
  double prev = 0;
  for (int k = 0; k <= 25; ++k) {
    Interval z = bessel::first_zero(static_cast<double>(k)).z;
    EXPECT_GT(z.lo_d(), prev);
    prev = z.hi_d();
  }
}

TEST(BesselZero, IntervalOrderGivesHull) {
  Interval nu(3.0, 3.5, 128);
  bessel::BesselZeroEnclosure z = bessel::first_zero(nu);
  EXPECT_TRUE(z.z.contains(boost::math::cyl_bessel_j_zero(3.0, 1)));
  EXPECT_TRUE(z.z.contains(boost::math::cyl_bessel_j_zero(3.5, 1)));
}

TEST(BesselZero, Errors) {
  EXPECT_THROW(bessel::first_zero(26.0), Error);
  EXPECT_THROW(bessel::first_zero(-1.0), Error);
  EXPECT_THROW(bessel::first_zero(1.0, 0.0), Error);
}
