#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace treeshift::numerics {

class Rational;

/// Arbitrary-precision nonnegative integer. Backed by GMP; subtraction is
/// deliberately absent so the nonnegativity invariant cannot be broken.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit BigNat(const mpz_class& v);
  static BigNat parse(std::string_view decimal);

  const mpz_class& raw() const { return v_; }

  BigNat& operator+=(const BigNat& o);
  BigNat& operator*=(const BigNat& o);
  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }

  BigNat pow(unsigned long e) const;

  friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  /// Number of bits in the binary representation (0 for zero).
  std::size_t bit_length() const;
  /// Exact number of decimal digits (1 for zero).
  std::size_t decimal_digits() const;
  std::string to_string() const { return v_.get_str(); }
  bool fits_u64() const;
  std::uint64_t to_u64() const;

 private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigNat& v);

/// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v);  // NOLINT(google-explicit-constructor)
  Rational(int v) : Rational(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpq_class& v);
  explicit Rational(const BigNat& v);
  Rational(const BigNat& num, const BigNat& den);
  /// Accepts "a", "-a", "a/b" and decimals such as "-0.25" or "1e-3".
  static Rational parse(std::string_view text);
  /// 2^-e, exactly.
  static Rational inverse_power_of_two(unsigned long e);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  /// Integer power; negative exponents invert (and throw on zero).
  Rational pow(long e) const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }
  /// Canonical GMP form: "a" for integers, "a/b" otherwise.
  std::string to_string() const { return v_.get_str(); }
  /// Always "num/den"; used in machine-readable output.
  std::string to_fraction_string() const;
  /// Decimal rendering rounded to `digits` places after the point.
  std::string to_decimal(int digits) const;
  /// Bit length of max(|num|, den).
  std::size_t height_bits() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

/// Binomial coefficient C(n, k) as an exact integer.
BigNat binomial(unsigned long n, unsigned long k);

}  // namespace treeshift::numerics
