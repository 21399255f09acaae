#include "treeshift/numerics/interval.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace treeshift::numerics {

namespace {

std::atomic<unsigned> g_precision{256};

// Scratch value at the working precision, released on scope exit.
struct Scratch {
  mpfr_t v;
  explicit Scratch(mpfr_prec_t p = working_precision()) { mpfr_init2(v, p); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
};

std::string format_endpoint(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_nan_p(x)) return "nan";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(x)) return "0";
  if (digits <= 0) digits = static_cast<int>(std::ceil(mpfr_get_prec(x) * 0.30103)) + 1;
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), x, rnd);
  std::string m(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!m.empty() && m.front() == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  // Value is 0.m * 10^e.
  std::string out;
  if (e > 0 && e <= 24) {
    if (static_cast<std::size_t>(e) >= m.size()) {
      out = m + std::string(static_cast<std::size_t>(e) - m.size(), '0');
    } else {
      out = m.substr(0, static_cast<std::size_t>(e)) + "." + m.substr(static_cast<std::size_t>(e));
    }
  } else if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + m;
  } else {
    out = m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(static_cast<long>(e) - 1);
  }
  if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign + out;
}

void require_ordered(mpfr_srcptr lo, mpfr_srcptr hi) {
  if (mpfr_nan_p(lo) || mpfr_nan_p(hi)) throw std::domain_error("Interval: NaN endpoint");
  if (mpfr_greater_p(lo, hi)) throw std::logic_error("Interval: lo > hi");
}

}  // namespace

unsigned working_precision() { return g_precision.load(std::memory_order_relaxed); }

void set_working_precision(unsigned bits) {
  if (bits < 64) throw std::invalid_argument("working precision must be at least 64 bits");
  g_precision.store(bits, std::memory_order_relaxed);
}

// Access helper for free functions defined below.
class IntervalAccess {
 public:
  static mpfr_ptr lo(Interval& x) { return x.lo_; }
  static mpfr_ptr hi(Interval& x) { return x.hi_; }
};

namespace {
mpfr_ptr L(Interval& x) { return IntervalAccess::lo(x); }
mpfr_ptr H(Interval& x) { return IntervalAccess::hi(x); }
}  // namespace

Interval::Interval() {
  mpfr_init2(lo_, working_precision());
  mpfr_init2(hi_, working_precision());
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v) : Interval() {
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Rational& v) : Interval() {
  mpfr_set_q(lo_, v.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, v.raw().get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const BigNat& v) : Interval() {
  mpfr_set_z(lo_, v.raw().get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, v.raw().get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi) : Interval() {
  if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
  mpfr_set_q(lo_, lo.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.raw().get_mpq_t(), MPFR_RNDU);
}

Interval Interval::from_double(double v) {
  Interval r;
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

Rational Interval::lower_rational() const {
  if (!mpfr_number_p(lo_)) throw std::domain_error("Interval: non-finite endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return Rational(q);
}

Rational Interval::upper_rational() const {
  if (!mpfr_number_p(hi_)) throw std::domain_error("Interval: non-finite endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return Rational(q);
}

Interval Interval::midpoint() const {
  Interval r;
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

double Interval::width() const {
  Scratch d(mpfr_get_prec(hi_));
  mpfr_sub(d.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(d.v, MPFR_RNDU);
}

double Interval::width_ulps() const {
  if (!is_finite()) return INFINITY;
  Scratch d(mpfr_get_prec(hi_) + 8);
  mpfr_sub(d.v, hi_, lo_, MPFR_RNDU);
  if (mpfr_zero_p(d.v)) return 0.0;
  mpfr_srcptr big = mpfr_cmpabs(hi_, lo_) >= 0 ? hi_ : lo_;
  if (mpfr_zero_p(big)) return INFINITY;
  // ulp(big) = 2^(EXP(big) - prec)
  long shift = static_cast<long>(mpfr_get_prec(hi_)) - static_cast<long>(mpfr_get_exp(big));
  mpfr_mul_2si(d.v, d.v, shift, MPFR_RNDU);
  return mpfr_get_d(d.v, MPFR_RNDU);
}

bool Interval::contains(const Rational& v) const {
  return mpfr_cmp_q(lo_, v.raw().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.raw().get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::overlaps(const Interval& o) const {
  return mpfr_lessequal_p(lo_, o.hi_) && mpfr_lessequal_p(o.lo_, hi_);
}

std::string Interval::lower_string(int digits) const { return format_endpoint(lo_, digits, MPFR_RNDD); }
std::string Interval::upper_string(int digits) const { return format_endpoint(hi_, digits, MPFR_RNDU); }

Interval& Interval::operator+=(const Interval& o) {
  Interval r;
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return *this = std::move(r);
}

Interval& Interval::operator-=(const Interval& o) {
  Interval r;
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return *this = std::move(r);
}

Interval& Interval::operator*=(const Interval& o) {
  Interval r;
  Scratch t;
  std::array<mpfr_srcptr, 2> a{lo_, hi_};
  std::array<mpfr_srcptr, 2> b{o.lo_, o.hi_};
  mpfr_set_inf(r.lo_, 1);
  mpfr_set_inf(r.hi_, -1);
  for (auto x : a) {
    for (auto y : b) {
      mpfr_mul(t.v, x, y, MPFR_RNDD);
      mpfr_min(r.lo_, r.lo_, t.v, MPFR_RNDD);
      mpfr_mul(t.v, x, y, MPFR_RNDU);
      mpfr_max(r.hi_, r.hi_, t.v, MPFR_RNDU);
    }
  }
  require_ordered(r.lo_, r.hi_);
  return *this = std::move(r);
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) throw std::domain_error("Interval: division by an interval containing zero");
  Interval r;
  Scratch t;
  std::array<mpfr_srcptr, 2> a{lo_, hi_};
  std::array<mpfr_srcptr, 2> b{o.lo_, o.hi_};
  mpfr_set_inf(r.lo_, 1);
  mpfr_set_inf(r.hi_, -1);
  for (auto x : a) {
    for (auto y : b) {
      mpfr_div(t.v, x, y, MPFR_RNDD);
      mpfr_min(r.lo_, r.lo_, t.v, MPFR_RNDD);
      mpfr_div(t.v, x, y, MPFR_RNDU);
      mpfr_max(r.hi_, r.hi_, t.v, MPFR_RNDU);
    }
  }
  require_ordered(r.lo_, r.hi_);
  return *this = std::move(r);
}

Interval Interval::operator-() const {
  Interval r;
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Interval& v) {
  return os << "[" << v.lower_string(20) << ", " << v.upper_string(20) << "]";
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.overlaps(b)) throw std::domain_error("Interval: empty intersection");
  Interval r;
  mpfr_max(L(r), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(H(r), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval square(const Interval& x) {
  Interval r;
  if (mpfr_sgn(x.lo()) >= 0) {
    mpfr_sqr(L(r), x.lo(), MPFR_RNDD);
    mpfr_sqr(H(r), x.hi(), MPFR_RNDU);
  } else if (mpfr_sgn(x.hi()) <= 0) {
    mpfr_sqr(L(r), x.hi(), MPFR_RNDD);
    mpfr_sqr(H(r), x.lo(), MPFR_RNDU);
  } else {
    mpfr_set_zero(L(r), 1);
    mpfr_srcptr m = mpfr_cmpabs(x.lo(), x.hi()) >= 0 ? x.lo() : x.hi();
    mpfr_sqr(H(r), m, MPFR_RNDU);
  }
  return r;
}

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo()) >= 0) return x;
  if (mpfr_sgn(x.hi()) <= 0) return -x;
  Interval r;
  mpfr_set_zero(L(r), 1);
  mpfr_srcptr m = mpfr_cmpabs(x.lo(), x.hi()) >= 0 ? x.lo() : x.hi();
  mpfr_abs(H(r), m, MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, unsigned long e) {
  if (e == 0) return Interval(1);
  Interval r;
  if (mpfr_sgn(x.lo()) >= 0) {
    mpfr_pow_ui(L(r), x.lo(), e, MPFR_RNDD);
    mpfr_pow_ui(H(r), x.hi(), e, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi()) <= 0) {
    if (e % 2 == 0) {
      mpfr_pow_ui(L(r), x.hi(), e, MPFR_RNDD);
      mpfr_pow_ui(H(r), x.lo(), e, MPFR_RNDU);
    } else {
      mpfr_pow_ui(L(r), x.lo(), e, MPFR_RNDD);
      mpfr_pow_ui(H(r), x.hi(), e, MPFR_RNDU);
    }
  } else if (e % 2 == 1) {
    mpfr_pow_ui(L(r), x.lo(), e, MPFR_RNDD);
    mpfr_pow_ui(H(r), x.hi(), e, MPFR_RNDU);
  } else {
    mpfr_set_zero(L(r), 1);
    mpfr_srcptr m = mpfr_cmpabs(x.lo(), x.hi()) >= 0 ? x.lo() : x.hi();
    mpfr_pow_ui(H(r), m, e, MPFR_RNDU);
  }
  return r;
}

Interval pow(const Interval& x, const Interval& y) {
  if (mpfr_sgn(x.lo()) < 0) throw std::domain_error("Interval pow: negative base");
  if (mpfr_zero_p(x.lo()) && mpfr_sgn(y.lo()) <= 0)
    throw std::domain_error("Interval pow: zero base with nonpositive exponent");
  // x^y is monotone in each argument separately on x > 0, so the extremes
  // over the box sit at its corners.
  Interval r;
  Scratch t;
  mpfr_set_inf(L(r), 1);
  mpfr_set_inf(H(r), -1);
  std::array<mpfr_srcptr, 2> xs{x.lo(), x.hi()};
  std::array<mpfr_srcptr, 2> ys{y.lo(), y.hi()};
  for (auto a : xs) {
    for (auto b : ys) {
      mpfr_pow(t.v, a, b, MPFR_RNDD);
      mpfr_min(L(r), L(r), t.v, MPFR_RNDD);
      mpfr_pow(t.v, a, b, MPFR_RNDU);
      mpfr_max(H(r), H(r), t.v, MPFR_RNDU);
    }
  }
  return r;
}

Interval pow(const Interval& x, const Rational& y) {
  if (y.is_integer() && y.sign() >= 0 && mpz_fits_ulong_p(y.numerator().get_mpz_t()))
    return pow(x, y.numerator().get_ui());
  return pow(x, Interval(y));
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo()) < 0) throw std::domain_error("Interval sqrt: negative argument");
  Interval r;
  mpfr_sqrt(L(r), x.lo(), MPFR_RNDD);
  mpfr_sqrt(H(r), x.hi(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo()) <= 0) throw std::domain_error("Interval log: nonpositive argument");
  Interval r;
  mpfr_log(L(r), x.lo(), MPFR_RNDD);
  mpfr_log(H(r), x.hi(), MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r;
  mpfr_exp(L(r), x.lo(), MPFR_RNDD);
  mpfr_exp(H(r), x.hi(), MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(L(r), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(H(r), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_max(L(r), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(H(r), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval log(const BigNat& v) {
  if (v.is_zero()) throw std::domain_error("log of zero");
  return log(Interval(v));
}

Interval interval_elementary(ElementaryKind kind, const Interval& x, const Interval& aux) {
  switch (kind) {
    case ElementaryKind::Sqrt:
      return sqrt(x);
    case ElementaryKind::Log:
      return log(x);
    case ElementaryKind::Exp:
      return exp(x);
    case ElementaryKind::Pow:
      return pow(x, aux);
  }
  throw std::invalid_argument("unknown elementary function");
}

Interval golden_ratio() { return (Interval(1) + sqrt(Interval(5))) / Interval(2); }

}  // namespace treeshift::numerics
