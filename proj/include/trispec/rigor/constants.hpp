#pragma once

// Cached enclosures of the handful of irrational constants that appear in the
// transcribed inequalities. Endpoints carry 8 guard bits beyond the requested
// precision so that width <= 2^(1 - prec) holds even for pi^4.

#include <map>
#include <memory>
#include <mutex>

#include "trispec/rigor/interval.hpp"

namespace trispec::rigor {

struct ConstantTable {
  Precision precision;
  Interval pi, pi2, pi4;
  Interval sqrt3, sqrt91, sqrt1729;
  Interval cbrt2, cbrt4;  // 2^(1/3), 2^(2/3)
};

namespace detail {

inline Interval root_of(long n, bool cube, Precision prec) {
  Interval r(prec);
  if (cube) {
    mpfr_set_si(r.lo_mut(), n, MPFR_RNDD);
    mpfr_set_si(r.hi_mut(), n, MPFR_RNDU);
    mpfr_cbrt(r.lo_mut(), r.lo(), MPFR_RNDD);
    mpfr_cbrt(r.hi_mut(), r.hi(), MPFR_RNDU);
  } else {
    mpfr_sqrt_ui(r.lo_mut(), static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_sqrt_ui(r.hi_mut(), static_cast<unsigned long>(n), MPFR_RNDU);
  }
  return r;
}

inline std::unique_ptr<ConstantTable> build_constants(Precision prec) {
  const Precision wp = prec + 8;
  // pi^2 and pi^4 are formed at extra precision and then rounded outward.
  Interval pi_hi = Interval::pi(wp + 16);
  Interval pi2_hi = sqr(pi_hi);
  Interval pi4_hi = sqr(pi2_hi);
  auto t = std::make_unique<ConstantTable>(ConstantTable{
      prec,
      pi_hi.with_precision(wp),
      pi2_hi.with_precision(wp),
      pi4_hi.with_precision(wp),
      root_of(3, false, wp),
      root_of(91, false, wp),
      root_of(1729, false, wp),
      root_of(2, true, wp),
      root_of(4, true, wp),
  });
  return t;
}

}  // namespace detail

// Thread-safe; tables are built once per precision and never freed.
inline const ConstantTable& constants(Precision prec) {
  static std::mutex mu;
  static std::map<Precision, std::unique_ptr<ConstantTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it == cache.end()) it = cache.emplace(prec, detail::build_constants(prec)).first;
  return *it->second;
}

}  // namespace trispec::rigor
