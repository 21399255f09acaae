#include "treeshift/poly_verify.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "treeshift/counts.hpp"
#include "treeshift/published_polynomials.hpp"

namespace treeshift {

using numerics::pow;
using numerics::sqrt;

namespace {

void require_k(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
}

// a + b s with s^2 = R.
struct QuadElem {
  Polynomial a;
  Polynomial b;
};

QuadElem mul(const QuadElem& x, const QuadElem& y, const Polynomial& R) {
  return {x.a * y.a + x.b * y.b * R, x.a * y.b + x.b * y.a};
}

QuadElem power(QuadElem base, unsigned e, const Polynomial& R) {
  QuadElem result{Polynomial(1), Polynomial()};
  while (e > 0) {
    if (e & 1U) result = mul(result, base, R);
    e >>= 1U;
    if (e > 0) base = mul(base, base, R);
  }
  return result;
}

Interval c_of(int k, const Interval& r) {
  return (Interval(1) + sqrt(Interval(1) + Interval(4) * pow(r, static_cast<unsigned long>(k - 1)))) / Interval(2);
}

bool narrow_zero(const Interval& x) { return x.contains_zero() && x.width() < 1e-12; }

std::vector<mpz_class> divisors(const mpz_class& v) {
  mpz_class n = abs(v);
  if (n == 0) return {};
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 40) throw std::domain_error("rational_roots: coefficient too large to factor");
  unsigned long m = n.get_ui();
  std::vector<mpz_class> out;
  for (unsigned long i = 1; i * i <= m; ++i) {
    if (m % i != 0) continue;
    out.emplace_back(i);
    if (i != m / i) out.emplace_back(m / i);
  }
  return out;
}

Polynomial compute_q(int k) {
  Polynomial p = p_k(k);
  return poly_div_exact(conjugate_square(build_nk(k)), p * p).quot;
}

}  // namespace

Interval RadicalExpr::evaluate(const Interval& r) const {
  return numerics::interval_eval(rad_free, r) +
         numerics::interval_eval(rad_coeff, r) * sqrt(numerics::interval_eval(radicand, r));
}

Polynomial p_k(int k) {
  require_k(k);
  return Polynomial::monomial(1, static_cast<std::size_t>(k + 1)) + Polynomial::variable() - Polynomial(1);
}

Polynomial radicand_k(int k) {
  require_k(k);
  return Polynomial(1) + Polynomial::monomial(4, static_cast<std::size_t>(k - 1));
}

RadicalExpr build_nk(int k) {
  require_k(k);
  const Polynomial R = radicand_k(k);
  const QuadElem c{Polynomial(Rational(1, 2)), Polynomial(Rational(1, 2))};
  const QuadElem ck = power(c, static_cast<unsigned>(k), R);
  const QuadElem c2k = mul(ck, ck, R);
  const Polynomial v = Polynomial(1) + Polynomial::monomial(1, static_cast<std::size_t>(k));
  const Polynomial vk = v.pow(static_cast<unsigned>(k - 1));
  RadicalExpr e;
  e.radicand = R;
  e.rad_free = c2k.a - vk * (ck.a + Polynomial(1));
  e.rad_coeff = c2k.b - vk * ck.b;
  return e;
}

Polynomial conjugate_square(const RadicalExpr& e) {
  return e.rad_free * e.rad_free - e.rad_coeff * e.rad_coeff * e.radicand;
}

SignSplit sign_split_check(const RadicalExpr& e) {
  SignSplit s;
  if (e.rad_free.is_zero()) return s;
  s.rad_free_roots = numerics::sturm_count(e.rad_free, 0, 1).count;
  s.rad_free_negative = e.rad_free.sign_at(0) < 0 && s.rad_free_roots == 0;
  if (e.rad_coeff.is_zero()) {
    s.rad_coeff_nonneg = true;
    return s;
  }
  // Drop the r^m factor; a root of the cofactor at r = 1 is not a sign change.
  s.rad_coeff_valuation = e.rad_coeff.valuation();
  Polynomial co = e.rad_coeff.shift_down(s.rad_coeff_valuation);
  numerics::SturmCount sc = numerics::sturm_count(co, 0, 1);
  s.rad_coeff_sign_changes = sc.count - (sc.hi_was_root ? 1 : 0);
  s.rad_coeff_nonneg = s.rad_coeff_sign_changes == 0 && co.sign_at(Rational(1, 2)) > 0;
  return s;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  Polynomial q = numerics::primitive_part(p);
  if (q.valuation() > 0) {
    roots.emplace_back(0);
    q = q.shift_down(q.valuation());
  }
  if (q.degree() < 1) return roots;
  const mpz_class a0 = q.coeff(0).numerator();
  const mpz_class an = q.leading().numerator();
  for (const auto& num : divisors(a0)) {
    for (const auto& den : divisors(an)) {
      for (int sign : {1, -1}) {
        Rational cand(mpq_class(sign * num, den));
        if (q(cand).is_zero()) {
          bool seen = false;
          for (const auto& r : roots) seen = seen || r == cand;
          if (!seen) roots.push_back(cand);
        }
      }
    }
  }
  return roots;
}

MonotonicityCertificate certify_monotone(int k, CertifyOptions opts) {
  require_k(k);
  MonotonicityCertificate cert;
  cert.k = k;
  cert.nk = build_nk(k);
  cert.d = conjugate_square(cert.nk);
  cert.p = p_k(k);
  numerics::PolyDivision div = poly_div_exact(cert.d, cert.p * cert.p);
  cert.q = div.quot;
  cert.remainder = div.rem;
  cert.remainder_zero = div.rem.is_zero();
  cert.sign_split = sign_split_check(cert.nk);
  cert.value_at_0 = cert.q(0);
  cert.value_at_1 = cert.q(1);
  if (!cert.q.is_zero()) {
    numerics::SturmCount sc = numerics::sturm_count(cert.q, 0, 1);
    cert.roots_in_01 = sc.count;
    cert.sturm_endpoint_adjusted = sc.lo_was_root || sc.hi_was_root;
  } else {
    cert.roots_in_01 = 1;
  }
  cert.p_has_no_rational_root = rational_roots(cert.p).empty();

  // Direct check at the ratios the recursion actually produces.
  GoldenChain chain(k);
  cert.levels_ok = true;
  for (long n = -1;; ++n) {
    const GoldenLevel& lvl = chain.level(n);
    if (!lvl.ratio || lvl.ratio->height_bits() > static_cast<std::size_t>(opts.level_digit_cap * 3.33)) break;
    cert.levels_checked = n + 2;
    if (cert.p(*lvl.ratio).is_zero()) cert.levels_ok = false;
  }

  if (auto pub = published_polynomials(k)) {
    cert.matches_published = pub->A == cert.nk.rad_free.scaled(pub->rad_scale) &&
                             pub->rad_coeff == cert.nk.rad_coeff.scaled(pub->rad_scale) &&
                             pub->d == cert.d.scaled(pub->d_scale) && pub->q == cert.q;
  }
  return cert;
}

bool monotone_certified(int k) {
  static std::shared_mutex mu;
  static std::map<int, bool> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  bool ok = k >= 2 && certify_monotone(k).valid();
  std::unique_lock lock(mu);
  cache.emplace(k, ok);
  return ok;
}

EquivalenceVerdict equivalences_check(int k) {
  require_k(k);
  EquivalenceVerdict v;
  v.k = k;
  const Polynomial p = p_k(k);
  // p(0) = -1 < 0 < 1 = p(1); bisect exactly.
  Rational lo(0), hi(1);
  const Rational target = Rational::inverse_power_of_two(60);
  while (hi - lo > target) {
    Rational mid = (lo + hi) / Rational(2);
    if (p.sign_at(mid) < 0) lo = mid;
    else hi = mid;
  }
  v.root = Interval(lo, hi);
  const Interval& r = v.root;
  const Interval one(1);
  const Interval rk = pow(r, static_cast<unsigned long>(k));
  const Interval c = c_of(k, r);
  const Interval ck = pow(c, static_cast<unsigned long>(k));
  const Interval vk = pow(one + rk, static_cast<unsigned long>(k - 1));
  v.fixed_residual = one / (one + rk) - r;
  v.cr_residual = c * r - one;
  v.c_residual = ck * c - ck - one;
  v.eqb_residual = ck * ck - ck * vk - vk;
  v.holds = narrow_zero(v.fixed_residual) && narrow_zero(v.cr_residual) && narrow_zero(v.c_residual) &&
            narrow_zero(v.eqb_residual);
  return v;
}

EndpointVerdict endpoint_checks(int k) {
  if (k < 1) throw std::invalid_argument("endpoint_checks: k must be at least 1");
  EndpointVerdict v;
  v.k = k;
  v.holds = true;
  const Interval one(1);
  const Interval gamma = numerics::golden_ratio();
  if (k >= 2) {
    // r = 0: T r = 1. r = 1: T r = 1/2.
    v.at_0 = c_of(k, one) - pow(c_of(k, Interval(0)), static_cast<unsigned long>(k));
    const Interval half(Rational(1, 2));
    v.at_1 = c_of(k, half) - pow(half, static_cast<unsigned long>(k - 1)) * pow(c_of(k, one), static_cast<unsigned long>(k));
    v.holds = v.at_0->certainly_positive() && v.at_1->certainly_positive();
  }
  for (int j = 2; j <= std::max(k, 2); ++j) {
    Interval gap = (pow(gamma, static_cast<unsigned long>(j)) + one) / Interval(2) -
                   pow((gamma + one) / Interval(2), static_cast<unsigned long>(j));
    v.holds = v.holds && gap.certainly_positive();
    v.gamma_gaps.push_back(gap);
  }
  return v;
}

std::vector<AsymptoteRow> qk_asymptote_probe(int k, const std::vector<Rational>& samples) {
  const Polynomial q = compute_q(k);
  std::vector<AsymptoteRow> rows;
  for (const auto& r : samples) {
    if (r.sign() < 0 || r >= Rational(1)) throw std::invalid_argument("qk_asymptote_probe: samples must lie in [0, 1)");
    Rational one_minus = Rational(1) - r;
    rows.push_back({r, q(r), Rational(1) / (one_minus * one_minus)});
  }
  return rows;
}

}  // namespace treeshift
