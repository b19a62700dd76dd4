#pragma once

// Bound sweeps over the moduli space and bound-versus-oracle comparison.
// Rows are computed in parallel and returned in grid order.

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "trispec/fem/eigensolver.hpp"
#include "trispec/lambda1_bounds.hpp"
#include "trispec/lambda2_bounds.hpp"

namespace trispec {

struct SweepRow {
  double p = 0;
  double q = 0;
  AreaLabel area = AreaLabel::ACUTE;
  double lambda1_lower = 0;  // rounded down
  BoundMethod lambda1_method = BoundMethod::DIAM_HEIGHT;
  double lambda2_upper = 0;  // rounded up
  BoundMethod lambda2_method = BoundMethod::RECTANGLE;
  double ratio_bound = 0;    // rounded up
  double margin = 0;         // rounded down
  bool certified = false;    // margin >= 0 proven in interval arithmetic
  std::optional<double> fem_l1;
  std::optional<double> fem_l2;

  bool sandwich_ok() const {
    return !fem_l1 || (lambda1_lower <= *fem_l1 && *fem_l2 <= 1.01 * lambda2_upper);
  }
};

struct SweepOptions {
  int grid = 200;
  bool include_acute = false;
  int fem_level = -1;  // < 0: no oracle columns
  Precision prec = 64;
  // Coarser Bessel order grid than the per-triangle default: zeros are
  // shared across many rows.
  Lambda1Options lambda1 = {bessel::kDefaultZeroTol, 8, bessel::kMaxOrder};
  unsigned threads = 0;  // 0: hardware concurrency
};

// Grid p_i = 1/2 + i/(2(N-1)), q_j = (j+1)/(2N). Points of the right/obtuse
// quarter-disc are kept; acute points inside the moduli region are kept only
// on request.
inline std::vector<std::array<double, 2>> sweep_points(int n, bool include_acute) {
  if (n < 2) throw Error("grid must be at least 2");
  std::vector<std::array<double, 2>> pts;
  for (int i = 0; i < n; ++i) {
    const double p = 0.5 + static_cast<double>(i) / (2.0 * (n - 1));
    for (int j = 0; j < n; ++j) {
      const double q = (j + 1) / (2.0 * n);
      const double r = (p - 0.5) * (p - 0.5) + q * q - 0.25;
      if (r <= kRightTolerance || (include_acute && p * p + q * q <= 1)) pts.push_back({p, q});
    }
  }
  return pts;
}

inline SweepRow sweep_row(double p, double q, const SweepOptions& opt) {
  TriangleParam t = TriangleParam::from_double(p, q, opt.prec);
  SweepRow row;
  row.p = p;
  row.q = q;
  row.area = area_label(t);
  BoundResult lo = best_lower(t, opt.lambda1);
  BoundResult up = best_upper(t);
  row.lambda1_lower = mpfr_get_d(lo.value.lo(), MPFR_RNDD);
  row.lambda1_method = lo.method;
  row.lambda2_upper = mpfr_get_d(up.value.hi(), MPFR_RNDU);
  row.lambda2_method = up.method;
  Interval ratio = detail::hi_point(up.value) / detail::lo_point(lo.value);
  Interval margin = Interval::from_rational(mpq_class(7, 3), opt.prec) - ratio;
  row.ratio_bound = mpfr_get_d(ratio.hi(), MPFR_RNDU);
  row.margin = mpfr_get_d(margin.lo(), MPFR_RNDD);
  row.certified = row.area != AreaLabel::ACUTE && mpfr_sgn(margin.lo()) >= 0;
  if (opt.fem_level >= 0) {
    fem::Spectrum s = fem::smallest_two(fem::build_mesh(p, q, opt.fem_level));
    row.fem_l1 = s.lambda1;
    row.fem_l2 = s.lambda2;
  }
  return row;
}

inline std::vector<SweepRow> sweep(const SweepOptions& opt) {
  const auto pts = sweep_points(opt.grid, opt.include_acute);
  std::vector<SweepRow> rows(pts.size());
  unsigned nt = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min<unsigned>(nt, std::max<std::size_t>(pts.size(), 1));
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr failure;
  auto work = [&] {
    for (;;) {
      std::size_t k;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= pts.size() || failure) return;
        k = next++;
      }
      try {
        rows[k] = sweep_row(pts[k][0], pts[k][1], opt);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (nt <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nt; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool with_fem) {
  os << "p,q,area,lambda1_lower,lambda1_method,lambda2_upper,lambda2_method,ratio_bound,margin";
  if (with_fem) os << ",fem_l1,fem_l2,sandwich_ok";
  os << "\n";
  std::ostringstream line;
  for (const auto& r : rows) {
    line.str("");
    line << std::setprecision(12) << r.p << "," << r.q << "," << to_string(r.area) << "," << r.lambda1_lower << ","
         << to_string(r.lambda1_method) << "," << r.lambda2_upper << "," << to_string(r.lambda2_method) << ","
         << r.ratio_bound << "," << r.margin;
    if (with_fem) {
      line << "," << r.fem_l1.value_or(NAN) << "," << r.fem_l2.value_or(NAN) << "," << (r.sandwich_ok() ? 1 : 0);
    }
    os << line.str() << "\n";
  }
}

}  // namespace trispec
