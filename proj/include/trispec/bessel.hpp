#pragma once

// J_nu(x) for real nu in [0, 25] and x in [0, 60] by the ascending series
//   J_nu(x) = sum_k (-1)^k (x/2)^(nu+2k) / (k! Gamma(nu+k+1)),
// and certified enclosures of its first positive zero j_nu.

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include <boost/math/special_functions/bessel.hpp>

#include "trispec/error.hpp"
#include "trispec/rigor/interval.hpp"

namespace trispec::bessel {

using rigor::Interval;
using rigor::Precision;
using rigor::kDefaultPrecision;

inline constexpr double kMaxOrder = 25.0;
inline constexpr double kMaxArgument = 60.0;
inline constexpr double kDefaultZeroTol = 1e-10;

struct BesselZeroEnclosure {
  Interval nu;
  Interval z;
};

namespace detail {

inline std::string order_key(const Interval& nu) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%Ra:%Ra", nu.lo(), nu.hi());
  std::string k(s);
  mpfr_free_str(s);
  return k;
}

}  // namespace detail

// nu must be a point interval.
inline Interval bessel_j(const Interval& nu, const Interval& x, Precision prec = kDefaultPrecision) {
  if (!nu.is_point()) throw Error("bessel_j needs a point order");
  if (mpfr_sgn(nu.lo()) < 0 || mpfr_cmp_d(nu.lo(), kMaxOrder) > 0) throw Error("order outside [0, 25]");
  if (mpfr_sgn(x.lo()) < 0) throw Error("bessel_j needs x >= 0");
  if (mpfr_cmp_d(x.hi(), kMaxArgument) > 0) throw Error("bessel_j argument above 60");

  // The largest series term is about e^x; the extra bits absorb cancellation.
  const Precision wprec = std::max(prec, nu.precision()) + static_cast<Precision>(std::ceil(1.4427 * x.hi_d())) + 16;
  Interval v = nu.with_precision(wprec);
  Interval half_x = x.with_precision(wprec) / 2L;
  Interval neg_x2 = -rigor::sqr(half_x);
  Interval t = rigor::pow_real(half_x, v) / rigor::gamma(v + 1L);

  Interval sum = t;
  double largest = t.mag();
  const double x2_hi = rigor::sqr(half_x).hi_d();
  const double nu_d = nu.lo_d();
  const double eps = std::ldexp(1.0, -static_cast<int>(wprec));
  for (long k = 1;; ++k) {
    if (k > 100000) throw EvaluationError("precision exhausted");
    t = t * neg_x2 / (k * (v + k));
    const double mag = t.mag();
    // From here on every term ratio is at most x2/((k+1)(nu+k+1)).
    const double rho = x2_hi / ((k + 1.0) * (nu_d + k + 1.0));
    if (rho <= 0.5 && (mag <= eps * largest || mag == 0.0)) {
      // |tail| <= |t_k| / (1 - rho) <= 2 |t_k|, widened by one ulp.
      Interval tail(std::nextafter(-2 * mag, -INFINITY), std::nextafter(2 * mag, INFINITY), 64);
      sum = sum + tail;
      break;
    }
    sum = sum + t;
    largest = std::max(largest, mag);
  }
  Interval out = sum.with_precision(prec);
  if (x.is_point() && out.width() > std::ldexp(1.0, -30)) throw EvaluationError("precision exhausted");
  return out;
}

inline Interval bessel_j(double nu, const Interval& x, Precision prec = kDefaultPrecision) {
  return bessel_j(Interval(nu, std::max<Precision>(prec, 64)), x, prec);
}

namespace detail {

enum class CertSign { POS, NEG, UNKNOWN };

inline CertSign sign_at(const Interval& nu, const Interval& x, Precision prec) {
  Interval v = bessel_j(nu, x, prec);
  if (v.certainly_positive()) return CertSign::POS;
  if (v.certainly_negative()) return CertSign::NEG;
  return CertSign::UNKNOWN;
}

inline BesselZeroEnclosure compute_first_zero(const Interval& nu, double tol, Precision prec) {
  // J_nu > 0 on (0, nu], so stepping starts at max(nu, 1).
  Interval a = mpfr_cmp_ui(nu.hi(), 1) > 0 ? Interval::point(nu.hi(), nu.precision()) : Interval::from_int(1, prec);
  if (sign_at(nu, a, prec) != CertSign::POS) throw Error("bracket failure: J not positive at start");
  const Interval step = Interval::from_rational(mpq_class(1, 4), prec);
  Interval b = a + step;
  for (;;) {
    if (mpfr_cmp_d(b.lo(), kMaxArgument) > 0) throw Error("bracket failure");
    CertSign s = sign_at(nu, b, prec);
    if (s == CertSign::NEG) break;
    if (s == CertSign::POS) a = b;
    b = b + step;
  }
  // A double-precision estimate usually pins the zero with two evaluations.
  try {
    const double guess = boost::math::cyl_bessel_j_zero(nu.lo_d(), 1);
    Interval g(guess, prec);
    Interval d(tol / 4, prec);
    Interval lo = g - d, hi = g + d;
    if (mpfr_cmp(lo.lo(), a.lo()) > 0 && mpfr_cmp(hi.hi(), b.lo()) < 0) {
      Interval glo = Interval::point(lo.lo(), lo.precision());
      Interval ghi = Interval::point(hi.hi(), hi.precision());
      if (sign_at(nu, glo, prec) == CertSign::POS && sign_at(nu, ghi, prec) == CertSign::NEG) {
        return {nu, Interval::from_mpfr(glo.lo(), ghi.hi(), std::max(glo.precision(), ghi.precision()))};
      }
    }
  } catch (const std::exception&) {
    // fall through to bisection
  }
  // Bisection on the certified sign change.
  while (mpfr_get_d(b.lo(), MPFR_RNDU) - mpfr_get_d(a.lo(), MPFR_RNDD) > tol) {
    Interval m = Interval::hull(a, b).midpoint();
    CertSign s = sign_at(nu, m, prec);
    if (s == CertSign::POS) {
      a = m;
    } else if (s == CertSign::NEG) {
      b = m;
    } else {
      Interval d = Interval(tol / 4, prec);
      Interval lo = m - d, hi = m + d;
      if (sign_at(nu, Interval::point(lo.lo(), lo.precision()), prec) != CertSign::POS ||
          sign_at(nu, Interval::point(hi.hi(), hi.precision()), prec) != CertSign::NEG) {
        throw EvaluationError("precision exhausted");
      }
      a = Interval::point(lo.lo(), lo.precision());
      b = Interval::point(hi.hi(), hi.precision());
      break;
    }
  }
  return {nu, Interval::from_mpfr(a.lo(), b.hi(), std::max(a.precision(), b.precision()))};
}

}  // namespace detail

// Memoized per (order, tol, precision). For a non-point order the result is
// the hull of the endpoint zeros, relying on j_nu increasing in nu.
inline BesselZeroEnclosure first_zero(const Interval& nu, double tol = kDefaultZeroTol,
                                      Precision prec = kDefaultPrecision) {
  if (mpfr_sgn(nu.lo()) < 0 || mpfr_cmp_d(nu.hi(), kMaxOrder) > 0) throw Error("order outside [0, 25]");
  if (!(tol > 0)) throw Error("zero tolerance must be positive");
  if (!nu.is_point()) {
    BesselZeroEnclosure lo = first_zero(Interval::point(nu.lo(), nu.precision()), tol, prec);
    BesselZeroEnclosure hi = first_zero(Interval::point(nu.hi(), nu.precision()), tol, prec);
    return {nu, Interval::from_mpfr(lo.z.lo(), hi.z.hi(), std::max(lo.z.precision(), hi.z.precision()))};
  }
  using Key = std::tuple<std::string, double, Precision>;
  static std::mutex mu;
  static std::map<Key, BesselZeroEnclosure> memo;
  Key key{detail::order_key(nu), tol, prec};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  BesselZeroEnclosure r = detail::compute_first_zero(nu, tol, prec);
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, r);
  return r;
}

inline BesselZeroEnclosure first_zero(double nu, double tol = kDefaultZeroTol, Precision prec = kDefaultPrecision) {
  return first_zero(Interval(nu, std::max<Precision>(prec, 64)), tol, prec);
}

}  // namespace trispec::bessel
