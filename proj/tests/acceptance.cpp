// Acceptance run: one PASS/FAIL line per criterion, at the stated tolerances.

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "trispec/trispec.hpp"

using namespace trispec;
using namespace trispec::certificate;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  int number;
  bool pass;
  std::string text;
};

std::vector<Line> lines;

void report(int n, bool pass, const std::string& text) {
  lines.push_back({n, pass, text});
  std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << "  " << text << std::endl;
}

const Anchor* find_anchor(const CertificateReport& r, const std::string& step, const std::string& name) {
  for (const auto& a : r.areas) {
    for (const auto& s : a.steps) {
      if (s.id != step) continue;
      for (const auto& an : s.anchors) {
        if (an.name == name) return &an;
      }
    }
  }
  return nullptr;
}

void criterion1() {
  struct Want {
    const char* step;
    const char* name;
    double value;
    double tol;  // absolute; negative means relative
  };
  const std::vector<Want> wants = {
      {"area1.corner_right", "maximum over alpha", -1722.58, 0.5},
      {"area1.corner_right", "maximizing alpha", -0.265233, 1e-4},
      {"area1.arc_disc", "discriminant at sqrt91/20", -4.12237e8, 1e3},
      {"area2.lead_p_positive", "discriminant", -2.4e19, -0.05},
      {"area2.lead_q_positive", "discriminant", -7.6e20, -0.05},
      {"area2.line_lead", "leading coefficient at 384/425", -2.60188e9, 1e4},
      {"area2.line_disc", "discriminant at 384/425", -4.96593e17, 1e12},
      {"area2.line_disc", "discriminant at p2", -3.44375e17, 1e12},
      {"area2.arc_f", "f'(p1)", 5.5e7, -0.05},
      {"area2.arc_f", "f(p2)", -1.12135e8, 1e3},
      {"area2.arc_g", "p3", 0.81416, 1e-4},
      {"area2.arc_left", "r'' at its vertex", 1.32883e21, 1e16},
      {"area2.arc_left", "r''(0.65)", 1.32557e21, 1e16},
      {"area2.arc_left", "r''(0.83)", 8.66388e20, 1e16},
      {"area2.arc_left", "r(0.65)", -4.39e18, -0.05},
      {"area2.arc_left", "r(0.83)", -1.62e18, -0.05},
      {"area3.pairs", "f(q0)/g(theta0) at (0.15, 0.2)", 0.9929, 5e-4},
      {"area3.pairs", "f(q0)/g(theta0) at (0.185, 0.225)", 0.9943, 5e-4},
      {"area3.pairs", "f(q0)/g(theta0) at (0.21, 0.24)", 0.9959, 5e-4},
      {"area4.endpoint", "f(0.156)", -0.0177, 5e-4},
  };
  const auto t0 = Clock::now();
  CertifyOptions opt;
  const CertificateReport r = certify(opt);
  const double secs = seconds_since(t0);
  std::ostringstream os;
  int contained = 0;
  std::vector<std::string> misses;
  for (const Want& w : wants) {
    const Anchor* a = find_anchor(r, w.step, w.name);
    const double tol = w.tol < 0 ? -w.tol * std::abs(w.value) : w.tol;
    if (a && a->enclosure_lo >= w.value - tol && a->enclosure_hi <= w.value + tol) {
      ++contained;
      continue;
    }
    std::ostringstream m;
    m << w.step << " '" << w.name << "' printed " << w.value;
    if (a) m << " vs enclosure [" << a->enclosure_lo << ", " << a->enclosure_hi << "]";
    else m << " (anchor missing)";
    misses.push_back(m.str());
  }
  const bool verdict = r.overall_verdict == Verdict::PASS;
  os << "replay " << to_string(r.overall_verdict) << " in " << secs << " s; printed anchors contained "
     << contained << "/" << wants.size();
  for (const auto& m : misses) os << "; " << m;
  report(1, verdict && secs < 60 && misses.empty(), os.str());
}

void criterion2() {
  const auto t0 = Clock::now();
  SubdivisionOptions opt;
  opt.max_depth = 30;
  bool ok = true;
  std::ostringstream os;
  for (AreaLabel a : {AreaLabel::I, AreaLabel::II, AreaLabel::III, AreaLabel::IV}) {
    ProofStep s = certify_subdivision(a, opt);
    ok = ok && s.verdict == Verdict::PASS;
    os << to_string(a) << " " << to_string(s.verdict) << " (" << s.detail.substr(0, s.detail.find(';')) << "); ";
  }
  const double secs = seconds_since(t0);
  os << secs << " s";
  report(2, ok && secs < 600, os.str());
}

void criterion3() {
  const double pi2 = M_PI * M_PI;
  Interval t45 = transplant_upper(TriangleParam::exact(mpq_class(1, 2), mpq_class(1, 2)), Family::T45).value;
  TriangleParam t = {Interval::from_rational(mpq_class(3, 4), 128), rigor::constants(128).sqrt3 / 4L};
  Interval t30 = transplant_upper(t, Family::T30).value;
  const double e45 = std::abs(t45.hi_d() / (20 * pi2) - 1);
  const double e30 = std::abs(t30.hi_d() / (208 * pi2 / 9) - 1);
  std::ostringstream os;
  os << "T45(1/2,1/2)/20pi^2 - 1 = " << e45 << ", T30(3/4,sqrt3/4)/(208pi^2/9) - 1 = " << e30;
  report(3, e45 <= 1e-10 && e30 <= 1e-10, os.str());
}

void criterion4() {
  CoefficientCheckOptions opt;
  opt.n_points = 5;
  opt.tol = 1e-8;
  opt.e_tol = 1e-10;
  ProofStep s = verify_coefficient_formulas(opt);
  double worst = 0, worst_e = 0;
  for (const auto& a : s.anchors) {
    if (a.name.find('|') != std::string::npos) worst_e = std::max(worst_e, a.enclosure_hi);
    else worst = std::max(worst, a.enclosure_hi);
  }
  std::ostringstream os;
  os << "12 formulas at 5 points: worst relative error " << worst << ", worst |E| " << worst_e;
  report(4, s.verdict == Verdict::PASS, os.str());
}

void criterion5() {
  Interval j0 = bessel::first_zero(0.0).z;
  Interval j12 = bessel::first_zero(12.0).z;
  Interval j13 = bessel::first_zero(13.0).z;
  Interval gap = j13 - j12;
  Interval jh = bessel::first_zero(Interval::from_rational(mpq_class(1, 2), 128), 1e-12).z;
  const bool ok = j0.subset_of(2.404, 2.406) && j13.hi_d() <= 17.802 && gap.subset_of(1.05, 1.15) &&
                  jh.contains(M_PI) && jh.width() <= 2e-10 && std::abs(jh.mid_d() - M_PI) <= 1e-10;
  std::ostringstream os;
  os << std::setprecision(12) << "j_0 " << j0 << ", j_13 " << j13 << ", j_13 - j_12 " << gap << ", j_1/2 - pi "
     << jh.mid_d() - M_PI;
  report(5, ok, os.str());
}

void criterion6() {
  struct Case {
    const char* name;
    double p, q, ratio;
  };
  const Case cases[] = {{"equilateral", 0.5, std::sqrt(3.0) / 2, 7.0 / 3.0},
                        {"45-45-90", 0.5, 0.5, 2.0},
                        {"30-60-90", 0.75, std::sqrt(3.0) / 4, 13.0 / 7.0}};
  bool ok = true;
  std::ostringstream os;
  for (const Case& c : cases) {
    const auto t0 = Clock::now();
    fem::Spectrum s = fem::oracle(c.p, c.q, 6);
    const double secs = seconds_since(t0);
    const double err = std::abs(s.extrapolated_ratio() / c.ratio - 1);
    ok = ok && s.extrapolated && err <= 1e-3 && secs < 30;
    os << c.name << " " << s.extrapolated_ratio() << " (rel err " << err << ", " << secs << " s); ";
  }
  report(6, ok, os.str());
}

void criterion7() {
  SweepOptions opt;
  opt.grid = 200;
  const auto t0 = Clock::now();
  auto rows = sweep(opt);
  std::size_t negative = 0, uncertified = 0;
  double worst = 1e300, worst_ratio = 0;
  for (const auto& r : rows) {
    negative += r.margin < 0;
    uncertified += !r.certified;
    worst = std::min(worst, r.margin);
    worst_ratio = std::max(worst_ratio, r.ratio_bound);
  }
  std::ostringstream os;
  os << rows.size() << " right/obtuse grid points; margin < 0 at " << negative << ", uncertified " << uncertified
     << "; largest ratio bound " << worst_ratio << ", smallest margin " << worst << "; " << seconds_since(t0) << " s";
  report(7, negative == 0 && uncertified == 0 && !rows.empty(), os.str());
}

void criterion8() {
  SweepOptions opt;
  opt.grid = 20;
  opt.fem_level = 5;
  auto rows = sweep(opt);
  std::size_t lower_bad = 0, upper_bad = 0;
  double worst_upper = 0;
  std::string worst_at;
  for (const auto& r : rows) {
    lower_bad += !(r.lambda1_lower <= *r.fem_l1);
    const bool up = *r.fem_l2 <= 1.01 * r.lambda2_upper;
    upper_bad += !up;
    const double excess = *r.fem_l2 / r.lambda2_upper;
    if (excess > worst_upper) {
      worst_upper = excess;
      std::ostringstream at;
      at << "(" << r.p << ", " << r.q << ")";
      worst_at = at.str();
    }
  }
  std::ostringstream os;
  os << rows.size() << " points at refinement 5: lambda1_lower > lambda1h at " << lower_bad
     << ", lambda2h > 1.01 lambda2_upper at " << upper_bad << "; largest lambda2h/lambda2_upper " << worst_upper
     << " at " << worst_at;
  report(8, lower_bad == 0 && upper_bad == 0, os.str());
}

}  // namespace

int main() {
  std::cout << std::setprecision(6);
  const std::pair<int, void (*)()> all[] = {{1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
                                            {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  for (const auto& [n, fn] : all) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(n, false, std::string("error: ") + e.what());
    }
  }
  int failed = 0;
  for (const auto& l : lines) failed += !l.pass;
  std::cout << (lines.size() - failed) << "/" << lines.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
