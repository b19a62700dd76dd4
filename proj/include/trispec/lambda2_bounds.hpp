#pragma once

// Certified upper bounds on the second Dirichlet eigenvalue.
//
// Transplant bounds: the first two eigenfunctions of a reference right
// triangle (30-60-90 or 45-45-90) are composed with an affine map L(p,q) onto
// the target triangle. With A..F the energy and mass Gram entries
//   A = int |grad f1|^2, B = int grad f1 . grad f2, C = int |grad f2|^2,
//   D = int f1^2,        E = int f1 f2,             F = int f2^2,
// lambda2 is at most the larger root of det([[A,B],[B,C]] - mu [[D,E],[E,F]]).
//
// Rectangle bound: an inscribed rectangle and domain monotonicity give
//   lambda2 <= pi^2 (1 + cbrt(4 q^2))^3 / q^2.

#include <array>
#include <cmath>
#include <vector>

#include "trispec/lambda1_bounds.hpp"

namespace trispec {

enum class Family { T30, T45 };

inline const char* to_string(Family f) { return f == Family::T30 ? "T30" : "T45"; }

namespace coeff_formulas {

// Numerators of the closed forms, written once for double and Interval.
// Each coefficient is numerator / (denominator * q); D = F = dq * q.

template <class T>
T zero_like(const T& x) {
  return x * 0L;
}

template <class T>
T a45_num(const T& p, const T& q, const T& pi2) {
  return p * (256L - 90L * pi2) + p * p * (-256L + 90L * pi2) - 256L * (q * q) + 45L * pi2 * (1L + 2L * (q * q));
}
template <class T>
T b45_num(const T& p, const T&, const T&) {
  return 512L * (1L - 2L * p);
}
template <class T>
T c45_num(const T& p, const T& q, const T& pi2) {
  return 5L * pi2 * (1L - 2L * p + 2L * (p * p) + 2L * (q * q));
}
inline constexpr long kA45Den = 72, kB45Den = 175, kC45Den = 4;

template <class T>
T a30_num(const T& p, const T& q, const T& pi2) {
  return -1594323L + 604800L * pi2 + 4L * p * (1245184L - 713743L * p + 100800L * (-3L + 2L * p) * pi2) -
         2854972L * (q * q) + 806400L * pi2 * (q * q);
}
template <class T>
T b30_num(const T& p, const T& q, const T&) {
  return -(2657205L + 4L * p * (-1507328L + 621593L * p) + 2486372L * (q * q));
}
template <class T>
T c30_num(const T& p, const T& q, const T& pi2) {
  return -1594323L + p * (6209536L - 6879600L * pi2) + 28L * (p * p) * (-145849L + 163800L * pi2) -
         4083772L * (q * q) + 1146600L * pi2 * (3L + 4L * (q * q));
}
inline constexpr long kA30Den = 345600, kB30Den = 354816, kC30Den = 1058400;

}  // namespace coeff_formulas

template <class T>
struct CoeffSet {
  T A, B, C, D, E, F;
};

// The printed closed forms evaluated at (p, q); pi2 is pi^2 in the scalar type.
template <class T>
CoeffSet<T> coeffs_t(const T& p, const T& q, const T& pi2, Family fam) {
  using namespace coeff_formulas;
  if (fam == Family::T45) {
    return {a45_num(p, q, pi2) / (kA45Den * q), b45_num(p, q, pi2) / (kB45Den * q), c45_num(p, q, pi2) / (kC45Den * q),
            q / 4L, zero_like(q), q / 4L};
  }
  return {a30_num(p, q, pi2) / (kA30Den * q), b30_num(p, q, pi2) / (kB30Den * q), c30_num(p, q, pi2) / (kC30Den * q),
          3L * q / 8L, zero_like(q), 3L * q / 8L};
}

inline double sqrt_any(double x) { return std::sqrt(x); }
inline Interval sqrt_any(const Interval& x) {
  try {
    return rigor::sqrt(x);
  } catch (const EvaluationError&) {
    throw Error("internal inconsistency: negative pencil discriminant");
  }
}

// Larger root of (DF - E^2) mu^2 - (AF + CD - 2BE) mu + (AC - B^2) = 0.
template <class T>
T pencil_sup_t(const CoeffSet<T>& c, bool e_is_zero) {
  if (e_is_zero) {
    T af = c.A * c.F, cd = c.C * c.D;
    T df = c.D * c.F;
    T diff = af - cd;
    return ((af + cd) + sqrt_any(diff * diff + 4L * df * (c.B * c.B))) / (2L * df);
  }
  T a = c.D * c.F - c.E * c.E;
  T b = c.A * c.F + c.C * c.D - 2L * c.B * c.E;
  T k = c.A * c.C - c.B * c.B;
  return (b + sqrt_any(b * b - 4L * a * k)) / (2L * a);
}

// q^2 times the transplant bound, computed from q-free numerators so that it
// stays tight on boxes that touch small q.
template <class T>
T transplant_scaled_t(const T& p, const T& q, const T& pi2, Family fam) {
  using namespace coeff_formulas;
  T aq, bq, cq;
  if (fam == Family::T45) {
    aq = a45_num(p, q, pi2) / kA45Den;
    bq = b45_num(p, q, pi2) / kB45Den;
    cq = c45_num(p, q, pi2) / kC45Den;
  } else {
    aq = a30_num(p, q, pi2) / kA30Den;
    bq = b30_num(p, q, pi2) / kB30Den;
    cq = c30_num(p, q, pi2) / kC30Den;
  }
  T diff = aq - cq;
  T s = (aq + cq) + sqrt_any(diff * diff + 4L * (bq * bq));
  // D = F = q/4 gives 2 s; D = F = 3q/8 gives (4/3) s.
  return fam == Family::T45 ? 2L * s : 4L * s / 3L;
}

struct RayleighCoefficients {
  Interval A, B, C, D, E, F;
  Family family;
  TriangleParam param;
};

inline RayleighCoefficients coeffs(const TriangleParam& t, Family fam) {
  require_nondegenerate(t);
  const Interval& pi2 = rigor::constants(t.precision()).pi2;
  CoeffSet<Interval> c = coeffs_t(t.p, t.q, pi2, fam);
  return {c.A, c.B, c.C, c.D, c.E, c.F, fam, t};
}

inline Interval pencil_sup(const RayleighCoefficients& c) {
  if (!c.D.certainly_positive() || !c.F.certainly_positive()) throw Error("pencil needs D > 0 and F > 0");
  const bool e_zero = c.E.is_point() && mpfr_zero_p(c.E.lo());
  return pencil_sup_t(CoeffSet<Interval>{c.A, c.B, c.C, c.D, c.E, c.F}, e_zero);
}

inline BoundResult transplant_upper(const TriangleParam& t, Family fam) {
  return {pencil_sup(coeffs(t, fam)), BoundKind::LAMBDA2_UPPER,
          fam == Family::T30 ? BoundMethod::TRANSPLANT_30 : BoundMethod::TRANSPLANT_45, t};
}

inline BoundResult rectangle_upper(const TriangleParam& t) {
  require_nondegenerate(t);
  const Interval& pi2 = rigor::constants(t.precision()).pi2;
  Interval q2 = rigor::sqr(t.q);
  Interval v = pi2 * rigor::pow(1L + rigor::cbrt(4L * q2), 3) / q2;
  return {v, BoundKind::LAMBDA2_UPPER, BoundMethod::RECTANGLE, t};
}

inline BoundResult best_upper(const TriangleParam& t) {
  BoundResult best = rectangle_upper(t);
  for (Family f : {Family::T45, Family::T30}) {
    BoundResult b = transplant_upper(t, f);
    if (mpfr_cmp(b.value.hi(), best.value.hi()) < 0) best = b;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Reference eigenfunctions, as sums c sin(m z) sin(n t) with z = zx x + z0,
// t = ty y + t0. Used by the quadrature cross-check and residual tests.

struct SineMode {
  double c;
  int m, n;
};

struct ReferenceFamily {
  Family family;
  std::array<std::array<double, 2>, 3> vertices;  // reference triangle
  double zx, z0, ty, t0;
  std::array<std::vector<SineMode>, 2> phi;
  std::array<double, 2> eigenvalue;  // exact, from the mode numbers
  // Target vertices (0,0), (1,0), (p,q) are sent to these reference vertices.
  std::array<int, 3> image_of;       // index into `vertices` for (0,0), (1,0), (p,q)

  double value(int which, double x, double y) const {
    double z = zx * x + z0, t = ty * y + t0, s = 0;
    for (const SineMode& md : phi[which]) s += md.c * std::sin(md.m * z) * std::sin(md.n * t);
    return s;
  }
  std::array<double, 2> gradient(int which, double x, double y) const {
    double z = zx * x + z0, t = ty * y + t0, gx = 0, gy = 0;
    for (const SineMode& md : phi[which]) {
      gx += md.c * md.m * zx * std::cos(md.m * z) * std::sin(md.n * t);
      gy += md.c * md.n * ty * std::sin(md.m * z) * std::cos(md.n * t);
    }
    return {gx, gy};
  }
};

inline const ReferenceFamily& reference_family(Family f) {
  static const ReferenceFamily t30 = [] {
    const double pi = M_PI, r3 = std::sqrt(3.0);
    ReferenceFamily r;
    r.family = Family::T30;
    r.vertices = {{{0.0, 0.0}, {0.5, 0.0}, {0.5, r3 / 2}}};
    // z = (pi/3)(2x - 1), t = pi (1 - 2y/sqrt3)
    r.zx = 2 * pi / 3;
    r.z0 = -pi / 3;
    r.ty = -2 * pi / r3;
    r.t0 = pi;
    r.phi = {std::vector<SineMode>{{1, 4, 2}, {-1, 5, 1}, {-1, 1, 3}}, std::vector<SineMode>{{1, 5, 3}, {-1, 2, 4}, {-1, 7, 1}}};
    // (4 pi^2 / 9)(m^2 + 3 n^2) with m^2 + 3n^2 = 28 and 52
    r.eigenvalue = {112 * pi * pi / 9, 208 * pi * pi / 9};
    // (0,0) -> (1/2, sqrt3/2), (1,0) -> (0,0), (p,q) -> (1/2, 0)
    r.image_of = {2, 0, 1};
    return r;
  }();
  static const ReferenceFamily t45 = [] {
    const double pi = M_PI;
    ReferenceFamily r;
    r.family = Family::T45;
    r.vertices = {{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}};
    r.zx = pi;
    r.z0 = 0;
    r.ty = pi;
    r.t0 = 0;
    r.phi = {std::vector<SineMode>{{1, 2, 1}, {1, 1, 2}}, std::vector<SineMode>{{1, 3, 1}, {-1, 1, 3}}};
    r.eigenvalue = {5 * pi * pi, 10 * pi * pi};
    // (0,0) -> (1,0), (1,0) -> (0,1), (p,q) -> (0,0)
    r.image_of = {1, 2, 0};
    return r;
  }();
  return f == Family::T30 ? t30 : t45;
}

// Affine map x -> M x + b sending the target vertices (0,0), (1,0), (p,q) to
// their reference images.
struct Affine {
  double m[2][2];
  double b[2];
};

inline Affine transplant_map(const ReferenceFamily& ref, double p, double q) {
  const auto& v0 = ref.vertices[ref.image_of[0]];
  const auto& v1 = ref.vertices[ref.image_of[1]];
  const auto& v2 = ref.vertices[ref.image_of[2]];
  Affine a;
  // b = L(0,0); first column = L(1,0) - L(0,0); second column from (p,q).
  a.b[0] = v0[0];
  a.b[1] = v0[1];
  a.m[0][0] = v1[0] - v0[0];
  a.m[1][0] = v1[1] - v0[1];
  a.m[0][1] = (v2[0] - v0[0] - p * a.m[0][0]) / q;
  a.m[1][1] = (v2[1] - v0[1] - p * a.m[1][0]) / q;
  return a;
}

}  // namespace trispec
