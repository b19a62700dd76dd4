// trispec: bounds, certificates, sweeps and FEM oracle runs from the shell.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trispec/trispec.hpp"

namespace {

using namespace trispec;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v, int digits = 10) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

// Opens PATH for writing, or returns stdout when PATH is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

struct BoundArgs {
  std::optional<double> p, q;
  std::string vertices;
  bool json_out = false;
  unsigned prec = 128;
};

int cmd_bound(const BoundArgs& a) {
  Canonical c;
  const Precision prec = a.prec;
  if (!a.vertices.empty()) {
    if (a.p || a.q) throw UsageError("give either --p/--q or --vertices");
    std::vector<double> v;
    std::stringstream ss(a.vertices);
    for (std::string tok; std::getline(ss, tok, ',');) {
      try {
        v.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw UsageError("bad coordinate '" + tok + "'");
      }
    }
    if (v.size() != 6) throw UsageError("--vertices needs x1,y1,x2,y2,x3,y3");
    c = canonicalize(Point::from_double(v[0], v[1], prec), Point::from_double(v[2], v[3], prec),
                     Point::from_double(v[4], v[5], prec));
  } else {
    if (!a.p || !a.q) throw UsageError("give --p and --q, or --vertices");
    c = {TriangleParam::from_double(*a.p, *a.q, prec), Interval::from_int(1, prec)};
    require_nondegenerate(c.param);
  }
  const TriangleParam& t = c.param;
  std::vector<BoundResult> bounds = {lower_diam_height(t)};
  std::string angle_note;
  try {
    bounds.push_back(lower_angle(t));
  } catch (const OrderOutOfRange&) {
    angle_note = "angle bound unavailable: Bessel order above 25";
  }
  bounds.push_back(transplant_upper(t, Family::T45));
  bounds.push_back(transplant_upper(t, Family::T30));
  bounds.push_back(rectangle_upper(t));
  const BoundResult lo = best_lower(t);
  const BoundResult up = best_upper(t);
  Interval ratio = detail::hi_point(up.value) / detail::lo_point(lo.value);
  const double ratio_hi = mpfr_get_d(ratio.hi(), MPFR_RNDU);
  const AreaLabel area = area_label(t);
  const double scale = c.scale.mid_d();

  auto claimed = [](const BoundResult& b) {
    return b.kind == BoundKind::LAMBDA1_LOWER ? mpfr_get_d(b.value.lo(), MPFR_RNDD)
                                              : mpfr_get_d(b.value.hi(), MPFR_RNDU);
  };
  if (a.json_out) {
    json j;
    j["p"] = t.p_mid();
    j["q"] = t.q_mid();
    j["scale"] = scale;
    j["class"] = to_string(classify(t));
    j["area"] = to_string(area);
    j["bounds"] = json::array();
    for (const auto& b : bounds) {
      j["bounds"].push_back({{"kind", to_string(b.kind)},
                             {"method", to_string(b.method)},
                             {"value", claimed(b)},
                             {"enclosure_lo", b.value.lo_d()},
                             {"enclosure_hi", b.value.hi_d()}});
    }
    j["lambda1_lower"] = {{"value", claimed(lo)}, {"method", to_string(lo.method)}};
    j["lambda2_upper"] = {{"value", claimed(up)}, {"method", to_string(up.method)}};
    j["ratio_bound"] = ratio_hi;
    if (!angle_note.empty()) j["note"] = angle_note;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "p = " << fmt(t.p_mid(), 12) << ", q = " << fmt(t.q_mid(), 12) << "\n";
  if (!a.vertices.empty()) {
    std::cout << "scale = " << fmt(scale, 12) << " (eigenvalues of the given triangle are the canonical ones divided by "
              << fmt(scale * scale, 12) << ")\n";
  }
  std::cout << "class = " << to_string(classify(t)) << ", area = " << to_string(area) << "\n";
  for (const auto& b : bounds) {
    std::cout << (b.kind == BoundKind::LAMBDA1_LOWER ? "lambda1 >= " : "lambda2 <= ") << fmt(claimed(b)) << "  ("
              << to_string(b.method) << ")\n";
  }
  if (!angle_note.empty()) std::cout << angle_note << "\n";
  std::cout << "best: lambda1 >= " << fmt(claimed(lo)) << " (" << to_string(lo.method) << "), lambda2 <= "
            << fmt(claimed(up)) << " (" << to_string(up.method) << ")\n";
  std::cout << "ratio bound lambda2/lambda1 <= " << fmt(ratio_hi) << "\n";
  return kOk;
}

struct CertifyArgs {
  std::string area = "all";
  std::string mode = "replay";
  unsigned max_depth = 30;
  unsigned prec = 128;
  std::string report;
  bool coefficients = false;
  double bessel_tol = bessel::kDefaultZeroTol;
  std::vector<std::string> mutate;
  bool deterministic = false;
};

int cmd_certify(const CertifyArgs& a) {
  certificate::CertifyOptions opt;
  try {
    opt.mode = certificate::parse_mode(a.mode);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (a.area != "all") {
    AreaLabel l;
    try {
      l = parse_area(a.area);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (l == AreaLabel::ACUTE) throw UsageError("the acute region is not certified");
    opt.areas = {l};
  }
  opt.prec = a.prec;
  opt.max_depth = a.max_depth;
  opt.bessel_tol = a.bessel_tol;
  opt.mutate = {a.mutate.begin(), a.mutate.end()};
  opt.coefficient_check = a.coefficients;
  opt.deterministic = a.deterministic;
  const certificate::CertificateReport r = certificate::certify(opt);

  for (const auto& area : r.areas) {
    std::cerr << "Area " << area.label << ": " << to_string(area.verdict) << "\n";
    for (const auto& s : area.steps) {
      std::cerr << "  " << std::left << std::setw(8) << to_string(s.verdict) << s.id << "\n";
    }
  }
  if (r.coefficient_check) {
    std::cerr << "Coefficients: " << to_string(r.coefficient_check->verdict) << "\n";
  }
  std::size_t anchors = 0, matched = 0;
  for (const auto& an : r.anchor_table()) {
    if (!an.paper_value) continue;
    ++anchors;
    matched += an.matches;
    if (!an.matches) {
      std::cerr << "  anchor mismatch: " << an.name << " printed " << *an.paper_value << ", enclosure ["
                << an.enclosure_lo << ", " << an.enclosure_hi << "]\n";
    }
  }
  std::cerr << "printed anchors contained: " << matched << "/" << anchors << "\n";
  for (const auto& id : certificate::failing_steps(r)) std::cerr << "failing step: " << id << "\n";
  std::cerr << "overall: " << to_string(r.overall_verdict) << " (" << fmt(r.wall_time_ms, 6) << " ms)\n";

  Output out(a.report);
  out.stream() << certificate::serialize(r) << "\n";
  return r.overall_verdict == certificate::Verdict::PASS ? kOk : kFail;
}

struct SweepArgs {
  int grid = 200;
  std::string out;
  bool include_acute = false;
  int refine = -1;
};

int cmd_sweep(const SweepArgs& a, bool compare) {
  if (a.grid < 2) throw UsageError("grid must be at least 2");
  SweepOptions opt;
  opt.grid = a.grid;
  opt.include_acute = a.include_acute;
  opt.fem_level = compare ? a.refine : -1;
  Output out(a.out);
  const std::vector<SweepRow> rows = sweep(opt);
  write_csv(out.stream(), rows, compare);
  std::size_t negative = 0, violations = 0;
  double worst = 1e300;
  for (const auto& r : rows) {
    if (r.area == AreaLabel::ACUTE) continue;
    worst = std::min(worst, r.margin);
    negative += r.margin < 0;
    violations += !r.sandwich_ok();
  }
  std::cerr << rows.size() << " rows; right/obtuse rows with margin < 0: " << negative << "; smallest margin "
            << fmt(worst) << "\n";
  if (compare) std::cerr << "sandwich violations: " << violations << "\n";
  return negative == 0 && violations == 0 ? kOk : kFail;
}

struct OracleArgs {
  double p = 0, q = 0;
  int refine = 5;
  bool extrapolate = false;
};

int cmd_oracle(const OracleArgs& a) {
  if (a.refine < 0 || a.refine > fem::kMaxLevel) throw UsageError("--refine must be in [0, 9]");
  if (!(a.q > kDegenerateQ)) throw DegenerateTriangle();
  fem::Spectrum s = fem::oracle(a.p, a.q, a.refine, a.extrapolate);
  std::cout << "p,q,level,lambda1h,lambda2h,ratio";
  if (a.extrapolate) std::cout << ",lambda1_extrap,lambda2_extrap,ratio_extrap";
  std::cout << "\n" << std::setprecision(12) << a.p << "," << a.q << "," << s.level << "," << s.lambda1 << ","
            << s.lambda2 << "," << s.ratio();
  if (a.extrapolate) {
    if (s.extrapolated) {
      std::cout << "," << (*s.extrapolated)[0] << "," << (*s.extrapolated)[1] << "," << s.extrapolated_ratio();
    } else {
      std::cout << ",,,";
    }
  }
  std::cout << "\n";
  if (!s.warning.empty()) std::cerr << "warning: " << s.warning << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigorous Dirichlet eigenvalue bounds on triangles"};
  app.require_subcommand(1);

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "certified lambda1/lambda2 bounds for one triangle");
  bound->add_option("--p", ba.p, "apex abscissa");
  bound->add_option("--q", ba.q, "apex height");
  bound->add_option("--vertices", ba.vertices, "x1,y1,x2,y2,x3,y3");
  bound->add_flag("--json", ba.json_out, "print JSON");
  bound->add_option("--prec", ba.prec, "working precision in bits")->check(CLI::Range(16u, 4096u));

  CertifyArgs ca;
  auto* cert = app.add_subcommand("certify", "replay and/or re-prove the four-area argument");
  cert->add_option("--area", ca.area, "I, II, III, IV or all");
  cert->add_option("--mode", ca.mode, "replay, subdivision or both");
  cert->add_option("--max-depth", ca.max_depth, "subdivision depth limit");
  cert->add_option("--prec", ca.prec, "replay precision in bits")->check(CLI::Range(2u, 4096u));
  cert->add_option("--report", ca.report, "write the JSON report here instead of stdout");
  cert->add_flag("--coefficients", ca.coefficients, "also cross-check the coefficient formulas by quadrature");
  cert->add_option("--bessel-tol", ca.bessel_tol, "width target for Bessel zero enclosures");
  cert->add_option("--mutate", ca.mutate, "flip every inequality in these step ids (soundness testing)");
  cert->add_flag("--deterministic", ca.deterministic, "omit wall time from the report");

  SweepArgs sa;
  auto* sw = app.add_subcommand("sweep", "bound sweep over the right/obtuse region, CSV");
  sw->add_option("--grid", sa.grid, "grid size N");
  sw->add_option("--out", sa.out, "CSV path (default stdout)");
  sw->add_flag("--include-acute", sa.include_acute, "also emit acute grid points, labeled ACUTE");

  OracleArgs oa;
  auto* orc = app.add_subcommand("oracle", "P1 FEM eigenvalues for one triangle, CSV");
  orc->add_option("--p", oa.p, "apex abscissa")->required();
  orc->add_option("--q", oa.q, "apex height")->required();
  orc->add_option("--refine", oa.refine, "refinement level");
  orc->add_flag("--extrapolate", oa.extrapolate, "Richardson extrapolation from the previous level");

  SweepArgs cpa;
  cpa.grid = 20;
  cpa.refine = 5;
  auto* cmp = app.add_subcommand("compare", "bounds against the FEM oracle, CSV");
  cmp->add_option("--grid", cpa.grid, "grid size N");
  cmp->add_option("--refine", cpa.refine, "refinement level")->check(CLI::Range(0, fem::kMaxLevel));
  cmp->add_option("--out", cpa.out, "CSV path (default stdout)");
  cmp->add_flag("--include-acute", cpa.include_acute, "also emit acute grid points, labeled ACUTE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*bound) return cmd_bound(ba);
    if (*cert) return cmd_certify(ca);
    if (*sw) return cmd_sweep(sa, false);
    if (*orc) return cmd_oracle(oa);
    if (*cmp) return cmd_sweep(cpa, true);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateTriangle& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
