#include <gtest/gtest.h>

#include <sstream>

#include "trispec/sweep.hpp"

using namespace trispec;

TEST(SweepPoints, GridInsideQuarterDisc) {
  auto pts = sweep_points(20, false);
  EXPECT_FALSE(pts.empty());
  for (const auto& [p, q] : pts) {
    EXPECT_GE(p, 0.5);
    EXPECT_GT(q, 0);
    EXPECT_LE((p - 0.5) * (p - 0.5) + q * q, 0.25 + 1e-12);
  }
  auto all = sweep_points(20, true);
  EXPECT_GT(all.size(), pts.size());
  EXPECT_THROW(sweep_points(1, false), Error);
}

TEST(Sweep, SmallGridCertified) {
  SweepOptions opt;
  opt.grid = 12;
  auto rows = sweep(opt);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) {
    EXPECT_NE(r.area, AreaLabel::ACUTE);
    EXPECT_TRUE(r.certified) << r.p << " " << r.q;
    EXPECT_GE(r.margin, 0);
    EXPECT_LE(r.ratio_bound, 7.0 / 3.0);
    EXPECT_NEAR(r.ratio_bound, r.lambda2_upper / r.lambda1_lower, 1e-9 * r.ratio_bound);
  }
}

TEST(Sweep, AcuteRowsCarryNoClaim) {
  SweepOptions opt;
  opt.grid = 8;
  opt.include_acute = true;
  int acute = 0;
  for (const auto& r : sweep(opt)) {
    if (r.area == AreaLabel::ACUTE) {
      ++acute;
      EXPECT_FALSE(r.certified);
    }
  }
  EXPECT_GT(acute, 0);
}

TEST(Sweep, ParallelMatchesSerial) {
  SweepOptions a;
  a.grid = 10;
  a.threads = 1;
  SweepOptions b = a;
  b.threads = 4;
  std::ostringstream sa, sb;
  write_csv(sa, sweep(a), false);
  write_csv(sb, sweep(b), false);
  EXPECT_EQ(sa.str(), sb.str());
}

TEST(Sweep, CsvHeaderAndColumns) {
  SweepOptions opt;
  opt.grid = 4;
  opt.fem_level = 3;
  std::ostringstream os;
  auto rows = sweep(opt);
  write_csv(os, rows, true);
  std::istringstream in(os.str());
  std::string header, line;
  std::getline(in, header);
  EXPECT_EQ(header,
            "p,q,area,lambda1_lower,lambda1_method,lambda2_upper,lambda2_method,ratio_bound,margin,fem_l1,fem_l2,"
            "sandwich_ok");
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 11);
  }
  EXPECT_EQ(n, rows.size());
  for (const auto& r : rows) {
    ASSERT_TRUE(r.fem_l1.has_value());
    EXPECT_LE(r.lambda1_lower, *r.fem_l1);
  }
}
