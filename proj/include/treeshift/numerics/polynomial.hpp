#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "treeshift/numerics/big.hpp"
#include "treeshift/numerics/interval.hpp"

namespace treeshift::numerics {

/// Dense univariate polynomial over the rationals; coeffs()[i] multiplies r^i.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has an empty vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// The identity polynomial r.
  static Polynomial variable() { return monomial(1, 1); }
  /// Sparse construction; repeated degrees accumulate.
  static Polynomial from_terms(const std::vector<std::pair<std::size_t, Rational>>& terms);

  const std::vector<Rational>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const;
  /// Number of nonzero coefficients.
  std::size_t term_count() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned e) const;
  Polynomial derivative() const;
  /// p(r) / r^m; requires the m lowest coefficients to vanish.
  Polynomial shift_down(std::size_t m) const;
  /// Multiply every coefficient by a rational scalar.
  Polynomial scaled(const Rational& s) const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return (*this)(x).sign(); }

  /// Human-readable form in the variable `var`, increasing degree.
  std::string to_string(char var = 'r') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

struct PolyDivision {
  Polynomial quot;
  Polynomial rem;
};

/// Euclidean division num = den*quot + rem with deg rem < deg den, exact.
/// Throws std::domain_error when den is zero.
PolyDivision poly_div_exact(const Polynomial& num, const Polynomial& den);

/// Positive rational multiple of p with coprime integer coefficients.
Polynomial primitive_part(const Polynomial& p);

/// Greatest common divisor, normalised by primitive_part (so its leading
/// coefficient is positive). gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p divided by gcd(p, p'): same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// Horner evaluation with outward rounding; encloses {p(t) : t in x}.
Interval interval_eval(const Polynomial& p, const Interval& x);

}  // namespace treeshift::numerics
