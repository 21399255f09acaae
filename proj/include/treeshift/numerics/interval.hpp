#pragma once

#include <iosfwd>
#include <string>

#include <mpfr.h>

#include "treeshift/numerics/big.hpp"

namespace treeshift::numerics {

/// Mantissa bits used for every Interval created after the call. Defaults to
/// 256; values below 64 are rejected.
unsigned working_precision();
void set_working_precision(unsigned bits);

/// Scoped override of the working precision.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits) : saved_(working_precision()) { set_working_precision(bits); }
  ~PrecisionGuard() { set_working_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
/// lower endpoint toward -inf and the upper toward +inf, so the result
/// encloses the exact image of the operands.
class Interval {
 public:
  Interval();
  Interval(long v);  // NOLINT(google-explicit-constructor)
  Interval(int v) : Interval(static_cast<long>(v)) {}  // NOLINT
  explicit Interval(const Rational& v);
  explicit Interval(const BigNat& v);
  Interval(const Rational& lo, const Rational& hi);
  static Interval from_double(double v);
  /// Smallest interval containing both arguments.
  static Interval hull(const Interval& a, const Interval& b);

  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  double lower() const;  // rounded down
  double upper() const;  // rounded up
  /// Exact rational value of an endpoint (endpoints are dyadic).
  Rational lower_rational() const;
  Rational upper_rational() const;
  /// Degenerate interval at the (rounded) midpoint. Not an enclosure of
  /// anything; used to seed iterations.
  Interval midpoint() const;
  /// Upper bound on hi - lo.
  double width() const;
  /// Number of ulps between the endpoints at this interval's precision.
  double width_ulps() const;

  bool contains(const Rational& v) const;
  bool contains(const Interval& inner) const;
  bool contains_zero() const;
  bool overlaps(const Interval& o) const;
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
  bool certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
  bool certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }
  bool certainly_greater(const Interval& o) const { return o.certainly_less(*this); }
  bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

  /// Decimal strings with `digits` significant digits, rounded outward.
  /// digits = 0 selects enough digits for the working precision.
  std::string lower_string(int digits = 0) const;
  std::string upper_string(int digits = 0) const;

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  Interval operator-() const;

  /// Set containment equality of endpoints; used by Eigen and tests only.
  friend bool operator==(const Interval& a, const Interval& b) {
    return mpfr_equal_p(a.lo_, b.lo_) && mpfr_equal_p(a.hi_, b.hi_);
  }

 private:
  friend class IntervalAccess;
  mpfr_t lo_;
  mpfr_t hi_;
};

std::ostream& operator<<(std::ostream& os, const Interval& v);

Interval intersect(const Interval& a, const Interval& b);
Interval square(const Interval& x);
Interval abs(const Interval& x);
Interval pow(const Interval& x, unsigned long e);
/// x^y for x >= 0 from rounded corner powers (monotone in each argument);
/// x = 0 maps to 0 for y > 0.
Interval pow(const Interval& x, const Interval& y);
Interval pow(const Interval& x, const Rational& y);
Interval sqrt(const Interval& x);
Interval log(const Interval& x);
Interval exp(const Interval& x);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);

/// log(v) for an exact nonnegative big integer v > 0.
Interval log(const BigNat& v);

enum class ElementaryKind { Sqrt, Log, Exp, Pow };
/// Single entry point over the elementary functions; `aux` is the exponent
/// for Pow and ignored otherwise.
Interval interval_elementary(ElementaryKind kind, const Interval& x, const Interval& aux = Interval(0));

/// Enclosure of the golden ratio (1 + sqrt 5) / 2.
Interval golden_ratio();

}  // namespace treeshift::numerics
