#include "treeshift/numerics/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace treeshift::numerics {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_terms(const std::vector<std::pair<std::size_t, Rational>>& terms) {
  std::size_t top = 0;
  for (const auto& [d, c] : terms) top = std::max(top, d);
  std::vector<Rational> v(terms.empty() ? 0 : top + 1);
  for (const auto& [d, c] : terms) v[d] += c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t Polynomial::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return 0;
}

std::size_t Polynomial::term_count() const {
  std::size_t n = 0;
  for (const auto& c : c_) n += c.is_zero() ? 0 : 1;
  return n;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(v);
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shift_down(std::size_t m) const {
  if (m == 0 || is_zero()) return *this;
  for (std::size_t i = 0; i < m && i < c_.size(); ++i)
    if (!c_[i].is_zero()) throw std::domain_error("shift_down: polynomial not divisible by r^m");
  if (m >= c_.size()) return {};
  return Polynomial(std::vector<Rational>(c_.begin() + static_cast<long>(m), c_.end()));
}

Polynomial Polynomial::scaled(const Rational& s) const {
  if (s.is_zero()) return {};
  Polynomial r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Rational Polynomial::operator()(const Rational& x) const {
  mpq_class acc = 0;
  const mpq_class& xv = x.raw();
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= xv;
    acc += c_[i].raw();
  }
  return Rational(acc);
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag.to_string();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

PolyDivision poly_div_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  std::vector<mpq_class> rem;
  rem.reserve(num.coeffs().size());
  for (const auto& c : num.coeffs()) rem.push_back(c.raw());
  if (rem.size() < d.size()) return {Polynomial(), num};

  std::vector<Rational> quot(rem.size() - dd);
  const mpq_class lead_inv = 1 / d.back().raw();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (sgn(rem[i]) == 0) continue;
    mpq_class q = rem[i] * lead_inv;
    quot[i - dd] = Rational(q);
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d[j].raw();
  }
  std::vector<Rational> r;
  r.reserve(dd);
  for (std::size_t i = 0; i < dd; ++i) r.emplace_back(rem[i]);
  return {Polynomial(std::move(quot)), Polynomial(std::move(r))};
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  return p.scaled(Rational(mpq_class(den_lcm, num_gcd)));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = primitive_part(a);
  Polynomial y = primitive_part(b);
  while (!y.is_zero()) {
    Polynomial r = primitive_part(poly_div_exact(x, y).rem);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.leading().sign() < 0 ? -x : x;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  Polynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return poly_div_exact(p, g).quot;
}

Interval interval_eval(const Polynomial& p, const Interval& x) {
  const auto& c = p.coeffs();
  if (c.empty()) return Interval(0);
  Interval acc(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc *= x;
    acc += Interval(c[i]);
  }
  return acc;
}

}  // namespace treeshift::numerics
