#include "treeshift/numerics/big.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace treeshift::numerics {

BigNat::BigNat(std::uint64_t v) {
  mpz_import(v_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

BigNat::BigNat(const mpz_class& v) : v_(v) {
  if (sgn(v_) < 0) throw std::domain_error("BigNat: negative value");
}

BigNat BigNat::parse(std::string_view decimal) {
  mpz_class v;
  if (decimal.empty() || v.set_str(std::string(decimal), 10) != 0)
    throw std::invalid_argument("BigNat: malformed integer '" + std::string(decimal) + "'");
  return BigNat(v);
}

BigNat& BigNat::operator+=(const BigNat& o) {
  v_ += o.v_;
  return *this;
}

BigNat& BigNat::operator*=(const BigNat& o) {
  v_ *= o.v_;
  return *this;
}

BigNat BigNat::pow(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return BigNat(r);
}

std::size_t BigNat::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
}

std::size_t BigNat::decimal_digits() const {
  if (is_zero()) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t est = mpz_sizeinbase(v_.get_mpz_t(), 10);
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, est - 1);
  return v_ >= p ? est : est - 1;
}

bool BigNat::fits_u64() const { return bit_length() <= 64; }

std::uint64_t BigNat::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigNat: value exceeds 64 bits");
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, v_.get_mpz_t());
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigNat& v) { return os << v.to_string(); }

Rational::Rational(long v) : v_(v) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rational::Rational(const BigNat& v) : v_(v.raw()) {}

Rational::Rational(const BigNat& num, const BigNat& den) {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  if (s.front() == '+') s.erase(0, 1);
  if (s.find('/') == std::string::npos && s.find_first_of(".eE") != std::string::npos) {
    // Decimal notation: [-]digits[.digits][e[+-]digits].
    const std::size_t epos = s.find_first_of("eE");
    std::string mant = s.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string::npos) {
      const std::string e = s.substr(epos + 1);
      std::size_t used = 0;
      try {
        exp10 = std::stol(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (e.empty() || used != e.size()) throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    }
    const bool neg = !mant.empty() && mant.front() == '-';
    if (neg) mant.erase(0, 1);
    const std::size_t dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      digits.erase(dot, 1);
      exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
    if (exp10 > 100000 || exp10 < -100000) throw std::out_of_range("Rational: exponent out of range");
    mpz_class num(digits, 10), scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    mpq_class v = exp10 < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
    v.canonicalize();
    if (neg) v = -v;
    return Rational(v);
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: malformed '" + std::string(text) + "'");
  if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::inverse_power_of_two(unsigned long e) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, e);
  return Rational(mpq_class(mpz_class(1), den));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("Rational: zero to a negative power");
    return (Rational(1) / *this).pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

std::string Rational::to_fraction_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
  mpz_class num = v_.get_num() * scale;
  mpz_class den = v_.get_den();
  // Round half away from zero.
  mpz_class twice = 2 * abs(num) + den;
  mpz_class q = twice / (2 * den);
  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, digits - body.size() + 1, '0');
    body.insert(body.size() - digits, ".");
  }
  return (sgn(num) < 0 && q != 0 ? "-" : "") + body;
}

std::size_t Rational::height_bits() const {
  std::size_t a = sgn(v_) == 0 ? 0 : mpz_sizeinbase(v_.get_num_mpz_t(), 2);
  std::size_t b = mpz_sizeinbase(v_.get_den_mpz_t(), 2);
  return std::max(a, b);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

BigNat binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return BigNat(r);
}

}  // namespace treeshift::numerics
