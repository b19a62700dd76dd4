#pragma once

// Triangles in moduli coordinates: vertices (0,0), (1,0), (p,q) with the
// longest side as the base and the apex reflected so that p >= 1/2.

#include <array>
#include <string>
#include <string_view>

#include "trispec/error.hpp"
#include "trispec/rigor/constants.hpp"
#include "trispec/rigor/interval.hpp"

namespace trispec {

using rigor::Interval;
using rigor::Precision;
using rigor::kDefaultPrecision;

enum class TriangleClass { ACUTE, RIGHT, OBTUSE };
enum class AreaLabel { I, II, III, IV, ACUTE };

inline const char* to_string(TriangleClass c) {
  switch (c) {
    case TriangleClass::ACUTE: return "ACUTE";
    case TriangleClass::RIGHT: return "RIGHT";
    case TriangleClass::OBTUSE: return "OBTUSE";
  }
  return "?";
}

inline const char* to_string(AreaLabel a) {
  switch (a) {
    case AreaLabel::I: return "I";
    case AreaLabel::II: return "II";
    case AreaLabel::III: return "III";
    case AreaLabel::IV: return "IV";
    case AreaLabel::ACUTE: return "ACUTE";
  }
  return "?";
}

inline AreaLabel parse_area(std::string_view s) {
  if (s == "I") return AreaLabel::I;
  if (s == "II") return AreaLabel::II;
  if (s == "III") return AreaLabel::III;
  if (s == "IV") return AreaLabel::IV;
  if (s == "ACUTE") return AreaLabel::ACUTE;
  throw Error("unknown area label '" + std::string(s) + "'");
}

struct TriangleParam {
  Interval p;
  Interval q;

  static TriangleParam exact(const mpq_class& p, const mpq_class& q, Precision prec = kDefaultPrecision) {
    return {Interval::from_rational(p, prec), Interval::from_rational(q, prec)};
  }
  static TriangleParam decimal(std::string_view p, std::string_view q, Precision prec = kDefaultPrecision) {
    return {Interval::from_decimal(p, prec), Interval::from_decimal(q, prec)};
  }
  static TriangleParam from_double(double p, double q, Precision prec = kDefaultPrecision) {
    return {Interval(p, prec), Interval(q, prec)};
  }

  Precision precision() const { return std::max(p.precision(), q.precision()); }
  double p_mid() const { return p.mid_d(); }
  double q_mid() const { return q.mid_d(); }
};

struct Point {
  Interval x;
  Interval y;
  static Point from_double(double x, double y, Precision prec = kDefaultPrecision) {
    return {Interval(x, prec), Interval(y, prec)};
  }
  static Point decimal(std::string_view x, std::string_view y, Precision prec = kDefaultPrecision) {
    return {Interval::from_decimal(x, prec), Interval::from_decimal(y, prec)};
  }
};

struct Canonical {
  TriangleParam param;
  Interval scale;  // original diameter; lambda(original) = lambda(canonical) / scale^2
};

inline constexpr double kDegenerateQ = 1e-9;
inline constexpr double kRightTolerance = 1e-12;

// Maps the longest side onto (0,0)-(1,0) by a similarity and reflects the apex
// into p >= 1/2.
inline Canonical canonicalize(const Point& v1, const Point& v2, const Point& v3) {
  const Point* pts[3] = {&v1, &v2, &v3};
  // side k joins pts[k] and pts[(k+1)%3]; the apex is pts[(k+2)%3]
  int longest = 0;
  double best = -1;
  std::array<Interval, 3> len2;
  for (int k = 0; k < 3; ++k) {
    const Point& a = *pts[k];
    const Point& b = *pts[(k + 1) % 3];
    len2[k] = rigor::sqr(b.x - a.x) + rigor::sqr(b.y - a.y);
    if (len2[k].mid_d() > best) {
      best = len2[k].mid_d();
      longest = k;
    }
  }
  const Point& a = *pts[longest];
  const Point& b = *pts[(longest + 1) % 3];
  const Point& c = *pts[(longest + 2) % 3];
  Interval ex = b.x - a.x, ey = b.y - a.y;
  Interval cx = c.x - a.x, cy = c.y - a.y;
  const Interval& d2 = len2[longest];
  if (d2.contains_zero()) throw DegenerateTriangle();
  Interval u = (cx * ex + cy * ey) / d2;
  Interval v = rigor::abs(ex * cy - ey * cx) / d2;
  if (v.hi_d() < kDegenerateQ || v.contains_zero()) throw DegenerateTriangle();
  if (u.mid_d() < 0.5) u = 1L - u;
  return {{u, v}, rigor::sqrt(d2)};
}

inline void require_nondegenerate(const TriangleParam& t) {
  if (!(t.q.lo_d() > 0) || t.q.hi_d() < kDegenerateQ) throw DegenerateTriangle();
}

inline TriangleClass classify(const TriangleParam& t) {
  require_nondegenerate(t);
  Interval half = Interval::from_rational(mpq_class(1, 2), t.precision());
  Interval quarter = Interval::from_rational(mpq_class(1, 4), t.precision());
  Interval r = rigor::sqr(t.p - half) + rigor::sqr(t.q) - quarter;
  if (r.overlaps(Interval(-kRightTolerance, kRightTolerance, t.precision()))) return TriangleClass::RIGHT;
  return r.certainly_negative() ? TriangleClass::OBTUSE : TriangleClass::ACUTE;
}

namespace detail {
inline Interval q_split(Precision prec) { return Interval::from_rational(mpq_class(156, 1000), prec); }
inline Interval p_split(Precision prec) { return Interval::from_rational(mpq_class(65, 100), prec); }
// 1.7 p - 1.38
inline Interval line_q(const Interval& p) {
  return Interval::from_rational(mpq_class(17, 10), p.precision()) * p -
         Interval::from_rational(mpq_class(138, 100), p.precision());
}
}  // namespace detail

// Boundary points receive the first label, in the order I, II, III, IV, whose
// closed region may contain them.
inline AreaLabel area_label(const TriangleParam& t) {
  if (classify(t) == TriangleClass::ACUTE) return AreaLabel::ACUTE;
  const Precision prec = t.precision();
  const Interval qs = detail::q_split(prec);
  const Interval ps = detail::p_split(prec);
  const Interval line = detail::line_q(t.p);
  const bool q_above_split = rigor::certainly_less_equal(qs, t.q) || t.q.overlaps(qs);
  if (q_above_split && (rigor::certainly_less_equal(t.p, ps) || t.p.overlaps(ps))) return AreaLabel::I;
  const bool q_above_line = mpfr_cmp(t.q.hi(), line.lo()) >= 0;
  if (q_above_split && q_above_line) return AreaLabel::II;
  const bool q_below_line = mpfr_cmp(t.q.lo(), line.hi()) <= 0;
  if (q_above_split && q_below_line) return AreaLabel::III;
  return AreaLabel::IV;
}

struct TriangleGeometry {
  Interval d;      // diameter
  Interval h;      // shortest altitude
  Interval area;
  Interval theta;  // smallest angle, radians
  TriangleClass cls;
};

// For canonical triangles (right, obtuse or acute with the base longest) the
// base is the diameter and its altitude q is the shortest; the smallest angle
// sits at the origin because the right-hand side is the shortest side.
inline TriangleGeometry geometry(const TriangleParam& t) {
  require_nondegenerate(t);
  const Precision prec = t.precision();
  return {Interval::from_int(1, prec), t.q, t.q / 2L, rigor::atan(t.q / t.p), classify(t)};
}

// All three altitudes, to the base, the left side and the right side.
inline std::array<Interval, 3> altitudes(const TriangleParam& t) {
  Interval left = rigor::sqrt(rigor::sqr(t.p) + rigor::sqr(t.q));
  Interval right = rigor::sqrt(rigor::sqr(1L - t.p) + rigor::sqr(t.q));
  return {t.q, t.q / left, t.q / right};
}

// Interior angles at (0,0), (1,0) and the apex.
inline std::array<Interval, 3> angles(const TriangleParam& t) {
  const Interval& pi = rigor::constants(t.precision()).pi;
  Interval a0 = rigor::atan(t.q / t.p);
  Interval a1 = rigor::atan(t.q / (1L - t.p));
  return {a0, a1, pi - a0 - a1};
}

}  // namespace trispec
