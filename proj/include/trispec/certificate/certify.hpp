#pragma once

// Assembles replay, subdivision and the coefficient cross-check into one
// report.

#include <chrono>
#include <set>
#include <string>
#include <vector>

#include "trispec/certificate/coefficients.hpp"
#include "trispec/certificate/replay.hpp"
#include "trispec/certificate/report.hpp"
#include "trispec/certificate/subdivision.hpp"

namespace trispec::certificate {

struct CertifyOptions {
  Mode mode = Mode::REPLAY;
  std::vector<AreaLabel> areas = {AreaLabel::I, AreaLabel::II, AreaLabel::III, AreaLabel::IV};
  Precision prec = rigor::kDefaultPrecision;
  // Subdivision precision; replay uses prec.
  Precision subdivision_prec = 64;
  unsigned max_depth = 30;
  double bessel_tol = bessel::kDefaultZeroTol;
  std::set<std::string> mutate;
  bool coefficient_check = false;
  // Zeroes wall_time_ms so that identical inputs give identical JSON.
  bool deterministic = false;
};

inline const std::vector<std::string>& assumed_lemmas() {
  static const std::vector<std::string> lemmas = {
      "diameter-height lower bound on lambda1 of a triangle (external)",
      "angle-Bessel lower bound lambda1 >= theta j_{pi/theta}^2 / (2 area) (external)",
      "acute triangles satisfy lambda2/lambda1 <= 7/3 (external, not certified here)",
      "Elbert: d j_t / dt > 1",
      "Elbert: j_t is concave as a function of t",
      "j_nu is increasing in nu (classical)",
      "domain monotonicity and min-max characterization of Dirichlet eigenvalues (classical)",
  };
  return lemmas;
}

inline std::vector<ProofStep> replay_area(AreaLabel a, const ReplayOptions& opt) {
  switch (a) {
    case AreaLabel::I: return verify_area1(opt);
    case AreaLabel::II: return verify_area2(opt);
    case AreaLabel::III: return verify_area3(opt);
    case AreaLabel::IV: return verify_area4(opt);
    case AreaLabel::ACUTE: break;
  }
  throw Error("the acute region is not certified");
}

inline CertificateReport certify(const CertifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CertificateReport r;
  r.mode = opt.mode;
  r.precision_bits = opt.prec;
  r.assumed_lemmas = assumed_lemmas();
  bool ok = true;

  ReplayOptions ro;
  ro.prec = opt.prec;
  ro.bessel_tol = opt.bessel_tol;
  ro.mutate = opt.mutate;
  SubdivisionOptions so;
  so.prec = opt.subdivision_prec;
  so.max_depth = opt.max_depth;

  for (AreaLabel a : opt.areas) {
    AreaResult res;
    res.label = to_string(a);
    if (opt.mode != Mode::SUBDIVISION) res.steps = replay_area(a, ro);
    if (opt.mode != Mode::REPLAY) res.steps.push_back(certify_subdivision(a, so));
    res.verdict = combine(res.steps);
    ok = ok && res.verdict == Verdict::PASS;
    r.areas.push_back(std::move(res));
  }
  if (opt.coefficient_check) {
    r.coefficient_check = verify_coefficient_formulas();
    ok = ok && r.coefficient_check->verdict == Verdict::PASS;
  }
  r.overall_verdict = ok ? Verdict::PASS : Verdict::FAIL;
  if (!opt.deterministic) {
    r.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

inline CertificateReport certify_replay_all(const ReplayOptions& ro = {}) {
  CertifyOptions opt;
  opt.prec = ro.prec;
  opt.bessel_tol = ro.bessel_tol;
  opt.mutate = ro.mutate;
  return certify(opt);
}

// Ids of the first failing steps, for error messages.
inline std::vector<std::string> failing_steps(const CertificateReport& r) {
  std::vector<std::string> out;
  for (const auto& a : r.areas) {
    for (const auto& s : a.steps) {
      if (s.verdict == Verdict::FAIL) out.push_back(s.id);
    }
  }
  if (r.coefficient_check && r.coefficient_check->verdict == Verdict::FAIL) out.push_back(r.coefficient_check->id);
  return out;
}

}  // namespace trispec::certificate
