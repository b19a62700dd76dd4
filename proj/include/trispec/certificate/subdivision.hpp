#pragma once

// Independent check of each area by 2-D interval branch and bound: a box
// passes when some pairing of a lambda2 upper bound with a lambda1 lower
// bound certifies 3 * upper <= 7 * lower on all of it. Both bounds are
// multiplied by q^2 so that they stay finite and tight as q -> 0.

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trispec/certificate/report.hpp"
#include "trispec/certificate/replay.hpp"
#include "trispec/lambda2_bounds.hpp"

namespace trispec::certificate {

struct SubdivisionOptions {
  Precision prec = 64;
  unsigned max_depth = 30;
  int order_grid_bits = 8;
  double zero_tol = 1e-8;
};

enum class UpperKind { T45, T30, RECT };
enum class LowerKind { DIAM_HEIGHT, ANGLE };

inline const char* to_string(UpperKind u) {
  switch (u) {
    case UpperKind::T45: return "T45";
    case UpperKind::T30: return "T30";
    case UpperKind::RECT: return "RECTANGLE";
  }
  return "?";
}

inline const char* to_string(LowerKind l) { return l == LowerKind::DIAM_HEIGHT ? "DIAM_HEIGHT" : "ANGLE_BESSEL"; }

struct Pairing {
  UpperKind upper;
  LowerKind lower;
};

// The area's designated pairing first, then the others.
inline std::vector<Pairing> pairings_for(AreaLabel a) {
  Pairing first;
  switch (a) {
    case AreaLabel::I: first = {UpperKind::T45, LowerKind::DIAM_HEIGHT}; break;
    case AreaLabel::II: first = {UpperKind::T30, LowerKind::DIAM_HEIGHT}; break;
    case AreaLabel::III: first = {UpperKind::RECT, LowerKind::ANGLE}; break;
    default: first = {UpperKind::RECT, LowerKind::DIAM_HEIGHT}; break;
  }
  std::vector<Pairing> out = {first};
  for (UpperKind u : {UpperKind::T45, UpperKind::T30, UpperKind::RECT}) {
    for (LowerKind l : {LowerKind::DIAM_HEIGHT, LowerKind::ANGLE}) {
      if (u != first.upper || l != first.lower) out.push_back({u, l});
    }
  }
  return out;
}

namespace detail {

// q^2 * lambda1 lower bounds.
inline Interval scaled_diam_height(const Interval& p, const Interval& q, const Interval& pi2) {
  Interval left = rigor::sqrt(rigor::sqr(p) + rigor::sqr(q));
  Interval right = rigor::sqrt(rigor::sqr(1L - p) + rigor::sqr(q));
  Interval d = rigor::max(rigor::max(Interval::from_int(1, p.precision()), left), right);
  // pi^2 (1/d + d/q)^2 q^2
  return pi2 * rigor::sqr(q / d + d);
}

inline std::optional<Interval> scaled_angle(const Interval& p, const Interval& q, const SubdivisionOptions& opt) {
  if (!q.certainly_positive()) return std::nullopt;
  const Precision prec = opt.prec;
  Interval theta = rigor::atan(q / p);
  Interval nu = rigor::constants(prec).pi / theta;
  if (mpfr_cmp_d(nu.hi(), bessel::kMaxOrder) > 0) return std::nullopt;
  Interval nu_lo = trispec::detail::order_grid_point(nu.lo(), opt.order_grid_bits, true);
  if (nu_lo.certainly_negative()) nu_lo = Interval::from_int(0, prec);
  Interval j = trispec::detail::lo_point(bessel::first_zero(nu_lo, opt.zero_tol, prec).z);
  // q^2 * theta j^2 / q, lower endpoint only
  return trispec::detail::lo_point(q) * trispec::detail::lo_point(theta) * rigor::sqr(j);
}

inline Interval scaled_upper(UpperKind u, const Interval& p, const Interval& q, const Interval& pi2) {
  switch (u) {
    case UpperKind::T45: return transplant_scaled_t(p, q, pi2, Family::T45);
    case UpperKind::T30: return transplant_scaled_t(p, q, pi2, Family::T30);
    case UpperKind::RECT: return pi2 * rigor::pow(1L + rigor::cbrt(4L * rigor::sqr(q)), 3);
  }
  throw Error("unknown upper bound");
}

inline bool possibly_in_area(AreaLabel a, const Interval& p, const Interval& q) {
  const Precision prec = std::max(p.precision(), q.precision());
  Interval r = rigor::sqr(p - rational(1, 2, prec)) + rigor::sqr(q);
  if (mpfr_cmp(r.lo(), rational(1, 4, prec).hi()) > 0) return false;  // acute
  const Interval qs = trispec::detail::q_split(prec);
  const Interval ps = trispec::detail::p_split(prec);
  const Interval line = trispec::detail::line_q(p);
  const bool q_high = mpfr_cmp(q.hi(), qs.lo()) >= 0;
  switch (a) {
    case AreaLabel::I: return q_high && mpfr_cmp(p.lo(), ps.hi()) <= 0;
    case AreaLabel::II:
      return q_high && mpfr_cmp(p.hi(), ps.lo()) >= 0 && mpfr_cmp(q.hi(), line.lo()) >= 0;
    case AreaLabel::III: return q_high && mpfr_cmp(q.lo(), line.hi()) <= 0;
    case AreaLabel::IV: return mpfr_cmp(q.lo(), qs.hi()) <= 0;
    case AreaLabel::ACUTE: return false;
  }
  return false;
}

// A closed box containing the area.
inline Box area_start_box(AreaLabel a, Precision prec) {
  auto hull = [&](const Interval& lo, const Interval& hi) { return Interval::hull(lo, hi); };
  const Interval half = rational(1, 2, prec), one = Interval::from_int(1, prec);
  const Interval qs = trispec::detail::q_split(prec), ps = trispec::detail::p_split(prec);
  Box b;
  switch (a) {
    case AreaLabel::I:
      b.emplace("p", hull(half, ps));
      b.emplace("q", hull(qs, half));
      break;
    case AreaLabel::II:
      b.emplace("p", hull(ps, rigor::iv_eval(expr("area2.p2"), {}, prec)));
      b.emplace("q", hull(qs, half));
      break;
    case AreaLabel::III:
      b.emplace("p", hull(rational(384, 425, prec), Interval::from_decimal("0.98", prec)));
      b.emplace("q", hull(qs, Interval::from_decimal("0.23", prec)));
      break;
    case AreaLabel::IV:
      b.emplace("p", hull(half, one));
      b.emplace("q", hull(Interval::from_int(0, prec), qs));
      break;
    case AreaLabel::ACUTE: throw Error("the acute region is not certified");
  }
  return b;
}

}  // namespace detail

// Proves lambda2/lambda1 <= 7/3 on every box of the area's region.
inline ProofStep certify_subdivision(AreaLabel area, const SubdivisionOptions& opt = {}) {
  using namespace detail;
  ProofStep step;
  step.id = std::string("area") + (area == AreaLabel::I ? "1" : area == AreaLabel::II ? "2" : area == AreaLabel::III ? "3" : "4") +
            ".subdivision";
  step.kind = StepKind::BOX_SUBDIVISION;
  step.claim = std::string("3 lambda2_upper <= 7 lambda1_lower on every box of Area ") + to_string(area);
  if (area == AreaLabel::ACUTE) {
    step.verdict = Verdict::FAIL;
    step.detail = "the acute region is not certified";
    return step;
  }
  const Precision prec = opt.prec;
  const Interval pi2 = rigor::constants(prec).pi2;
  const std::vector<Pairing> pairs = pairings_for(area);
  std::vector<std::size_t> used(pairs.size(), 0);
  std::size_t outside = 0;
  double worst_margin = 1e300;

  auto pred = [&](const Box& b) {
    const Interval& p = b.at("p");
    const Interval& q = b.at("q");
    if (!possibly_in_area(area, p, q)) {
      ++outside;
      return rigor::BoxVerdict::HOLDS;
    }
    std::optional<Interval> dh, ang;
    std::array<std::optional<Interval>, 3> up;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const Pairing& pr = pairs[i];
      std::optional<Interval> lower;
      if (pr.lower == LowerKind::DIAM_HEIGHT) {
        if (!dh) dh = scaled_diam_height(p, q, pi2);
        lower = dh;
      } else {
        try {
          if (!ang) ang = scaled_angle(p, q, opt);
        } catch (const Error&) {
          ang.reset();
        }
        lower = ang;
      }
      if (!lower) continue;
      auto& u = up[static_cast<int>(pr.upper)];
      try {
        if (!u) u = scaled_upper(pr.upper, p, q, pi2);
      } catch (const Error&) {
        continue;
      }
      Interval lhs = 3L * *u, rhs = 7L * *lower;
      if (rigor::certainly_less_equal(lhs, rhs)) {
        ++used[i];
        worst_margin = std::min(worst_margin, (rhs.lo_d() - lhs.hi_d()) / rhs.lo_d());
        return rigor::BoxVerdict::HOLDS;
      }
    }
    return rigor::BoxVerdict::SPLIT;
  };

  rigor::BisectOutcome o = rigor::bisect_prove(area_start_box(area, prec), pred, opt.max_depth);
  std::ostringstream os;
  os << o.boxes << " boxes, max depth " << o.depth << ", " << outside << " outside the area; pairings:";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (used[i]) os << " " << to_string(pairs[i].upper) << "/" << to_string(pairs[i].lower) << "=" << used[i];
  }
  if (o.proven) os << "; smallest relative margin " << worst_margin;
  if (!o.proven) os << "; depth exhausted on " << rigor::box_to_string(*o.witness);
  step.detail = os.str();
  step.verdict = o.proven ? Verdict::PASS : Verdict::FAIL;
  return step;
}

}  // namespace trispec::certificate
