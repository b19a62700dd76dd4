#pragma once

// Closed intervals with arbitrary-precision dyadic endpoints.
//
// Every operation rounds the lower endpoint towards -inf and the upper
// endpoint towards +inf, so the result always contains the exact image of
// the operands. Endpoints are MPFR numbers; the precision of a result is the
// larger of its operands' precisions.

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "trispec/error.hpp"

namespace trispec::rigor {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

// Parses a decimal literal ("-0.156", "1.7e-3", "42") into an exact rational.
inline mpq_class parse_decimal(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty numeric literal");
  bool negative = false;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long exponent = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      try {
        std::size_t used = 0;
        exponent += std::stol(s.substr(pos + 1), &used);
        if (used != s.size() - pos - 1) throw Error("bad exponent");
      } catch (const std::exception&) {
        throw Error("malformed numeric literal: " + s);
      }
      pos = s.size();
      break;
    } else {
      throw Error("malformed numeric literal: " + s);
    }
  }
  if (!any_digit) throw Error("malformed numeric literal: " + s);
  mpz_class num(digits, 10);
  mpz_class scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  mpq_class value = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

class Interval {
 public:
  Interval() : Interval(kDefaultPrecision) {}

  // The point interval [0, 0].
  explicit Interval(Precision prec) {
    init(prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  // Doubles are dyadic, so this is exact whenever prec >= 53.
  Interval(double value, Precision prec) {
    init(prec);
    mpfr_set_d(lo_, value, MPFR_RNDD);
    mpfr_set_d(hi_, value, MPFR_RNDU);
  }

  Interval(double lo, double hi, Precision prec) {
    if (!(lo <= hi)) throw Error("interval endpoints out of order");
    init(prec);
    mpfr_set_d(lo_, lo, MPFR_RNDD);
    mpfr_set_d(hi_, hi, MPFR_RNDU);
  }

  static Interval from_int(long value, Precision prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, value, MPFR_RNDD);
    mpfr_set_si(r.hi_, value, MPFR_RNDU);
    return r;
  }

  static Interval from_rational(const mpq_class& value, Precision prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  static Interval from_rational(const mpq_class& lo, const mpq_class& hi, Precision prec) {
    if (lo > hi) throw Error("interval endpoints out of order");
    Interval r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  static Interval from_decimal(std::string_view text, Precision prec) {
    return from_rational(parse_decimal(text), prec);
  }

  static Interval from_mpfr(mpfr_srcptr lo, mpfr_srcptr hi, Precision prec) {
    if (mpfr_cmp(lo, hi) > 0) throw Error("interval endpoints out of order");
    Interval r(prec);
    mpfr_set(r.lo_, lo, MPFR_RNDD);
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    return r;
  }

  static Interval point(mpfr_srcptr value, Precision prec) { return from_mpfr(value, value, prec); }

  static Interval hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }

  static Interval pi(Precision prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }

  static Interval entire(Precision prec) {
    Interval r(prec);
    mpfr_set_inf(r.lo_, -1);
    mpfr_set_inf(r.hi_, 1);
    return r;
  }

  Interval(const Interval& other) {
    init(other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }

  Interval(Interval&& other) noexcept {
    std::memcpy(lo_, other.lo_, sizeof(mpfr_t));
    std::memcpy(hi_, other.hi_, sizeof(mpfr_t));
    live_ = other.live_;
    other.live_ = false;
  }

  Interval& operator=(const Interval& other) {
    if (this == &other) return *this;
    if (!live_ || precision() != other.precision()) {
      release();
      init(other.precision());
    }
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
    return *this;
  }

  Interval& operator=(Interval&& other) noexcept {
    if (this == &other) return *this;
    release();
    std::memcpy(lo_, other.lo_, sizeof(mpfr_t));
    std::memcpy(hi_, other.hi_, sizeof(mpfr_t));
    live_ = other.live_;
    other.live_ = false;
    return *this;
  }

  ~Interval() { release(); }

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  Precision precision() const { return mpfr_get_prec(lo_); }

  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_d() const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
  }
  // Upper bound on hi - lo.
  double width() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
  }
  // Upper bound on max |x| over the interval.
  double mag() const { return std::max(std::abs(lo_d()), std::abs(hi_d())); }

  Interval midpoint() const {
    Interval r(precision() + 1);
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);  // exact at prec + 1
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
    mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
    return r;
  }

  std::pair<Interval, Interval> bisect() const {
    Interval m = midpoint();
    Interval left(precision() + 1), right(precision() + 1);
    mpfr_set(left.lo_, lo_, MPFR_RNDD);
    mpfr_set(left.hi_, m.hi_, MPFR_RNDU);
    mpfr_set(right.lo_, m.lo_, MPFR_RNDD);
    mpfr_set(right.hi_, hi_, MPFR_RNDU);
    return {std::move(left), std::move(right)};
  }

  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }
  bool contains(double v) const { return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0; }
  bool contains(const Interval& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
  }
  bool subset_of(double lo, double hi) const {
    return mpfr_cmp_d(lo_, lo) >= 0 && mpfr_cmp_d(hi_, hi) <= 0;
  }
  bool overlaps(const Interval& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
  }

  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_nonpositive() const { return mpfr_sgn(hi_) <= 0; }
  bool certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }

  // Interval at a different precision, rounded outward.
  Interval with_precision(Precision prec) const {
    Interval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  std::string to_string(int digits = 17) const {
    char* a = nullptr;
    char* b = nullptr;
    std::string fmt_lo = "%." + std::to_string(digits) + "RDg";
    std::string fmt_hi = "%." + std::to_string(digits) + "RUg";
    mpfr_asprintf(&a, fmt_lo.c_str(), lo_);
    mpfr_asprintf(&b, fmt_hi.c_str(), hi_);
    std::string s = "[" + std::string(a) + ", " + std::string(b) + "]";
    mpfr_free_str(a);
    mpfr_free_str(b);
    return s;
  }

  // Raw endpoint access for the arithmetic below.
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

 private:
  void init(Precision prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    live_ = true;
  }
  void release() {
    if (live_) {
      mpfr_clear(lo_);
      mpfr_clear(hi_);
      live_ = false;
    }
  }

  mpfr_t lo_;
  mpfr_t hi_;
  bool live_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.to_string(); }

namespace detail {

inline Precision join(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

// 0 * inf is NaN in MPFR; for interval products it contributes 0.
inline void mul_round(mpfr_ptr r, mpfr_srcptr a, mpfr_srcptr b, mpfr_rnd_t rnd) {
  if ((mpfr_zero_p(a) && mpfr_inf_p(b)) || (mpfr_inf_p(a) && mpfr_zero_p(b))) {
    mpfr_set_zero(r, 1);
    return;
  }
  mpfr_mul(r, a, b, rnd);
}

}  // namespace detail

inline Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo_mut(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi_mut(), a.lo(), MPFR_RNDU);
  return r;
}

inline Interval operator+(const Interval& a, const Interval& b) {
  Interval r(detail::join(a, b));
  mpfr_add(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

inline Interval operator-(const Interval& a, const Interval& b) {
  Interval r(detail::join(a, b));
  mpfr_sub(r.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

inline Interval operator*(const Interval& a, const Interval& b) {
  const Precision prec = detail::join(a, b);
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr ea[2] = {a.lo(), a.hi()};
  mpfr_srcptr eb[2] = {b.lo(), b.hi()};
  bool first = true;
  for (auto x : ea) {
    for (auto y : eb) {
      detail::mul_round(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo()) < 0) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
      detail::mul_round(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi()) > 0) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw EvaluationError("possible pole");
  const Precision prec = detail::join(a, b);
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr ea[2] = {a.lo(), a.hi()};
  mpfr_srcptr eb[2] = {b.lo(), b.hi()};
  bool first = true;
  for (auto x : ea) {
    for (auto y : eb) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo()) < 0) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi()) > 0) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
inline Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

// Integer literals adopt the precision of the other operand.
inline Interval operator+(const Interval& a, long b) { return a + Interval::from_int(b, a.precision()); }
inline Interval operator+(long a, const Interval& b) { return Interval::from_int(a, b.precision()) + b; }
inline Interval operator-(const Interval& a, long b) { return a - Interval::from_int(b, a.precision()); }
inline Interval operator-(long a, const Interval& b) { return Interval::from_int(a, b.precision()) - b; }
inline Interval operator*(const Interval& a, long b) { return a * Interval::from_int(b, a.precision()); }
inline Interval operator*(long a, const Interval& b) { return Interval::from_int(a, b.precision()) * b; }
inline Interval operator/(const Interval& a, long b) { return a / Interval::from_int(b, a.precision()); }
inline Interval operator/(long a, const Interval& b) { return Interval::from_int(a, b.precision()) / b; }

inline Interval sqr(const Interval& a) {
  Interval r(a.precision());
  if (mpfr_sgn(a.lo()) >= 0) {
    mpfr_sqr(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_sqr(r.hi_mut(), a.hi(), MPFR_RNDU);
  } else if (mpfr_sgn(a.hi()) <= 0) {
    mpfr_sqr(r.lo_mut(), a.hi(), MPFR_RNDD);
    mpfr_sqr(r.hi_mut(), a.lo(), MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_mut(), 1);
    if (mpfr_cmpabs(a.lo(), a.hi()) > 0) {
      mpfr_sqr(r.hi_mut(), a.lo(), MPFR_RNDU);
    } else {
      mpfr_sqr(r.hi_mut(), a.hi(), MPFR_RNDU);
    }
  }
  return r;
}

inline Interval pow(const Interval& a, unsigned n) {
  if (n == 0) return Interval::from_int(1, a.precision());
  if (n == 1) return a;
  Interval r(a.precision());
  if (n % 2 == 1 || mpfr_sgn(a.lo()) >= 0) {
    mpfr_pow_ui(r.lo_mut(), a.lo(), n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_mut(), a.hi(), n, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi()) <= 0) {
    mpfr_pow_ui(r.lo_mut(), a.hi(), n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_mut(), a.lo(), n, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_mut(), 1);
    mpfr_srcptr far = mpfr_cmpabs(a.lo(), a.hi()) > 0 ? a.lo() : a.hi();
    mpfr_pow_ui(r.hi_mut(), far, n, MPFR_RNDU);
  }
  return r;
}

// A lower endpoint below zero by no more than a couple of ulps (relative to
// max(1, |hi|)) is treated as rounding noise at a boundary such as
// sqrt(1 - 4q^2) at q = 1/2. Anything else is a domain error.
inline Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.hi()) < 0) throw EvaluationError("domain error: sqrt of a negative interval");
  Interval r(a.precision());
  if (mpfr_sgn(a.lo()) < 0) {
    mpfr_t slack;
    mpfr_init2(slack, 64);
    mpfr_set_ui(slack, 1, MPFR_RNDU);
    if (mpfr_cmp_ui(a.hi(), 1) > 0) mpfr_set(slack, a.hi(), MPFR_RNDU);
    mpfr_mul_2si(slack, slack, -(static_cast<long>(a.precision()) - 2), MPFR_RNDU);
    const bool noise = mpfr_cmpabs(a.lo(), slack) <= 0;
    mpfr_clear(slack);
    if (!noise) throw EvaluationError("domain error: sqrt of an interval straddling zero");
    mpfr_set_zero(r.lo_mut(), 1);
  } else {
    mpfr_sqrt(r.lo_mut(), a.lo(), MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

inline Interval cbrt(const Interval& a) {
  Interval r(a.precision());
  mpfr_cbrt(r.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_cbrt(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

inline Interval exp(const Interval& a) {
  Interval r(a.precision());
  mpfr_exp(r.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_exp(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

inline Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo()) <= 0) throw EvaluationError("domain error: log of a nonpositive interval");
  Interval r(a.precision());
  mpfr_log(r.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_log(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

inline Interval atan(const Interval& a) {
  Interval r(a.precision());
  mpfr_atan(r.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_atan(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

// tan is increasing on (-pi/2, pi/2); we require |x| <= 3/2 < pi/2.
inline Interval tan(const Interval& a) {
  if (mpfr_cmp_d(a.lo(), -1.5) < 0 || mpfr_cmp_d(a.hi(), 1.5) > 0) {
    throw EvaluationError("domain error: tan argument outside [-1.5, 1.5]");
  }
  Interval r(a.precision());
  mpfr_tan(r.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_tan(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

// base^exponent for base >= 0 and a point exponent >= 0; increasing in base.
inline Interval pow_real(const Interval& base, const Interval& exponent) {
  if (!exponent.is_point() || mpfr_sgn(exponent.lo()) < 0) {
    throw EvaluationError("pow_real needs a nonnegative point exponent");
  }
  if (mpfr_sgn(base.lo()) < 0) throw EvaluationError("domain error: pow_real of a negative base");
  Interval r(detail::join(base, exponent));
  mpfr_pow(r.lo_mut(), base.lo(), exponent.lo(), MPFR_RNDD);
  mpfr_pow(r.hi_mut(), base.hi(), exponent.lo(), MPFR_RNDU);
  return r;
}

// Gamma at a point argument (correctly rounded both ways), or over an
// interval inside [2, inf) where it is increasing.
inline Interval gamma(const Interval& a) {
  Interval r(a.precision());
  if (a.is_point()) {
    if (mpfr_sgn(a.lo()) <= 0 && mpfr_integer_p(a.lo())) throw EvaluationError("possible pole");
    mpfr_gamma(r.lo_mut(), a.lo(), MPFR_RNDD);
    mpfr_gamma(r.hi_mut(), a.lo(), MPFR_RNDU);
    return r;
  }
  if (mpfr_cmp_ui(a.lo(), 2) < 0) throw EvaluationError("gamma over a wide interval below 2");
  mpfr_gamma(r.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_gamma(r.hi_mut(), a.hi(), MPFR_RNDU);
  return r;
}

inline Interval abs(const Interval& a) {
  if (mpfr_sgn(a.lo()) >= 0) return a;
  if (mpfr_sgn(a.hi()) <= 0) return -a;
  Interval r(a.precision());
  mpfr_set_zero(r.lo_mut(), 1);
  if (mpfr_cmpabs(a.lo(), a.hi()) > 0) {
    mpfr_neg(r.hi_mut(), a.lo(), MPFR_RNDU);
  } else {
    mpfr_set(r.hi_mut(), a.hi(), MPFR_RNDU);
  }
  return r;
}

// Endpoint-wise max/min, used for enclosing max(f, g) and min(f, g).
inline Interval max(const Interval& a, const Interval& b) {
  Interval r(detail::join(a, b));
  mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

inline Interval min(const Interval& a, const Interval& b) {
  Interval r(detail::join(a, b));
  mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

// True when every element of a is below every element of b.
inline bool certainly_less(const Interval& a, const Interval& b) { return mpfr_cmp(a.hi(), b.lo()) < 0; }
inline bool certainly_less_equal(const Interval& a, const Interval& b) { return mpfr_cmp(a.hi(), b.lo()) <= 0; }

}  // namespace trispec::rigor
