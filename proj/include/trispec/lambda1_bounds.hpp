#pragma once

// Certified lower bounds on the first Dirichlet eigenvalue of a triangle in
// moduli coordinates:
//   diameter/height:  lambda1 >= pi^2 (1/d + 1/h)^2
//   angle/Bessel:     lambda1 >= theta j_{pi/theta}^2 / (2A)

#include <cmath>

#include "trispec/bessel.hpp"
#include "trispec/geometry.hpp"

namespace trispec {

enum class BoundKind { LAMBDA1_LOWER, LAMBDA2_UPPER };
enum class BoundMethod { DIAM_HEIGHT, ANGLE_BESSEL, TRANSPLANT_30, TRANSPLANT_45, RECTANGLE };

inline const char* to_string(BoundKind k) {
  return k == BoundKind::LAMBDA1_LOWER ? "LAMBDA1_LOWER" : "LAMBDA2_UPPER";
}

inline const char* to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::DIAM_HEIGHT: return "DIAM_HEIGHT";
    case BoundMethod::ANGLE_BESSEL: return "ANGLE_BESSEL";
    case BoundMethod::TRANSPLANT_30: return "TRANSPLANT_30";
    case BoundMethod::TRANSPLANT_45: return "TRANSPLANT_45";
    case BoundMethod::RECTANGLE: return "RECTANGLE";
  }
  return "?";
}

// For LAMBDA1_LOWER only value.lo is claimed; for LAMBDA2_UPPER only value.hi.
struct BoundResult {
  Interval value;
  BoundKind kind;
  BoundMethod method;
  TriangleParam param;
};

class OrderOutOfRange : public Error {
 public:
  OrderOutOfRange() : Error("order out of range") {}
};

struct Lambda1Options {
  double zero_tol = bessel::kDefaultZeroTol;
  // Bessel orders are rounded outward to multiples of 2^-bits so that zero
  // enclosures can be shared between nearby triangles.
  int order_grid_bits = 16;
  double max_order = bessel::kMaxOrder;
};

inline BoundResult lower_diam_height(const TriangleParam& t) {
  require_nondegenerate(t);
  Interval left = rigor::sqrt(rigor::sqr(t.p) + rigor::sqr(t.q));
  Interval right = rigor::sqrt(rigor::sqr(1L - t.p) + rigor::sqr(t.q));
  Interval d = rigor::max(rigor::max(Interval::from_int(1, t.precision()), left), right);
  Interval h = t.q / d;  // 2A / d
  const Interval& pi2 = rigor::constants(t.precision()).pi2;
  Interval v = pi2 * rigor::sqr(1L / d + 1L / h);
  return {v, BoundKind::LAMBDA1_LOWER, BoundMethod::DIAM_HEIGHT, t};
}

namespace detail {

// Dyadic grid point k / 2^bits at or below (down = true) or above x.
inline Interval order_grid_point(mpfr_srcptr x, int bits, bool down) {
  mpfr_t s;
  mpfr_init2(s, mpfr_get_prec(x) + 8);
  mpfr_mul_2si(s, x, bits, MPFR_RNDN);  // exact
  if (down) {
    mpfr_floor(s, s);
  } else {
    mpfr_ceil(s, s);
  }
  mpfr_div_2si(s, s, bits, MPFR_RNDN);  // exact
  Interval r = Interval::point(s, mpfr_get_prec(s));
  mpfr_clear(s);
  return r;
}

inline Interval lo_point(const Interval& x) { return Interval::point(x.lo(), x.precision()); }
inline Interval hi_point(const Interval& x) { return Interval::point(x.hi(), x.precision()); }

}  // namespace detail

// Enclosure of theta j_{pi/theta}^2 / q over the parameter box; the lower
// endpoint is the certified bound. Throws OrderOutOfRange if pi/theta > 25.
inline BoundResult lower_angle(const TriangleParam& t, const Lambda1Options& opt = {}) {
  require_nondegenerate(t);
  const Precision prec = t.precision();
  Interval theta = rigor::atan(t.q / t.p);
  if (!theta.certainly_positive()) throw OrderOutOfRange();
  Interval nu = rigor::constants(prec).pi / theta;
  if (mpfr_cmp_d(nu.hi(), opt.max_order) > 0) throw OrderOutOfRange();

  Interval nu_lo = detail::order_grid_point(nu.lo(), opt.order_grid_bits, true);
  if (nu_lo.certainly_negative()) nu_lo = Interval::from_int(0, prec);
  Interval j_lo = detail::lo_point(bessel::first_zero(nu_lo, opt.zero_tol, prec).z);
  Interval lo = detail::lo_point(theta) * rigor::sqr(j_lo) / detail::hi_point(t.q);

  Interval nu_hi = detail::order_grid_point(nu.hi(), opt.order_grid_bits, false);
  Interval value(prec);
  if (mpfr_cmp_d(nu_hi.hi(), bessel::kMaxOrder) <= 0) {
    Interval j_hi = detail::hi_point(bessel::first_zero(nu_hi, opt.zero_tol, prec).z);
    Interval hi = detail::hi_point(theta) * rigor::sqr(j_hi) / detail::lo_point(t.q);
    value = Interval::from_mpfr(lo.lo(), hi.hi(), prec);
  } else {
    mpfr_t inf;
    mpfr_init2(inf, prec);
    mpfr_set_inf(inf, 1);
    value = Interval::from_mpfr(lo.lo(), inf, prec);
    mpfr_clear(inf);
  }
  return {value, BoundKind::LAMBDA1_LOWER, BoundMethod::ANGLE_BESSEL, t};
}

inline BoundResult best_lower(const TriangleParam& t, const Lambda1Options& opt = {}) {
  BoundResult best = lower_diam_height(t);
  try {
    BoundResult a = lower_angle(t, opt);
    if (mpfr_cmp(a.value.lo(), best.value.lo()) > 0) best = a;
  } catch (const OrderOutOfRange&) {
    // the diameter/height bound stands
  }
  return best;
}

}  // namespace trispec
