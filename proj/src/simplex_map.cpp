#include "treeshift/simplex_map.hpp"

#include <cmath>
#include <stdexcept>

#include "treeshift/numerics/sturm.hpp"

namespace treeshift {

using numerics::pow;

namespace {

bool is_nonneg_integer(const Interval& k) {
  return mpfr_equal_p(k.lo(), k.hi()) && mpfr_integer_p(k.lo()) && mpfr_sgn(k.lo()) >= 0 &&
         mpfr_fits_ulong_p(k.lo(), MPFR_RNDN);
}

// x^k for x >= 0, exact integer powering when k is an integer.
Interval pow_k(const Interval& x, const Interval& k) {
  if (is_nonneg_integer(k)) return pow(x, mpfr_get_ui(k.lo(), MPFR_RNDN));
  return pow(x, k);
}

void require_positive(const Interval& k) {
  if (!k.certainly_positive()) throw std::invalid_argument("map exponent k must be positive");
}

Interval unit() { return Interval(Rational(0), Rational(1)); }

// Degenerate interval at a rational point.
Interval at(const Rational& x) { return Interval(x); }

}  // namespace

Interval apply_T(const Interval& k, const Interval& x) {
  require_positive(k);
  return Interval(1) / (Interval(1) + pow_k(x, k));
}

Rational apply_T(int k, const Rational& x) {
  if (k < 1) throw std::invalid_argument("map exponent k must be positive");
  return Rational(1) / (Rational(1) + x.pow(k));
}

Vector<Rational> apply_T(const TransitionMatrix& M, int k, const Vector<Rational>& r) {
  if (k < 1) throw std::invalid_argument("map exponent k must be positive");
  Vector<Rational> y = M.storage().cast<Rational>() * r;
  Rational g(0);
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    y(i) = y(i).pow(k);
    g += y(i);
  }
  if (g.is_zero()) throw std::domain_error("apply_T: image vector vanished");
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) /= g;
  return y;
}

Vector<Interval> apply_T(const TransitionMatrix& M, int k, const Vector<Interval>& r) {
  if (k < 1) throw std::invalid_argument("map exponent k must be positive");
  Vector<Interval> y = M.storage().cast<Interval>() * r;
  Interval g(0);
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    y(i) = pow(y(i), static_cast<unsigned long>(k));
    g += y(i);
  }
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = numerics::intersect(y(i) / g, unit());
  return y;
}

Interval abs_T_derivative(const Interval& k, const Interval& x) {
  require_positive(k);
  Interval xk = pow_k(x, k);
  Interval xkm1 = is_nonneg_integer(k) && mpfr_cmp_ui(k.lo(), 1) == 0 ? Interval(1) : pow_k(x, k - Interval(1));
  return k * xkm1 / numerics::square(Interval(1) + xk);
}

const char* to_string(Stability s) {
  switch (s) {
    case Stability::Attracting:
      return "attracting";
    case Stability::Repelling:
      return "repelling";
    case Stability::Inconclusive:
      return "marginal-inconclusive";
  }
  return "?";
}

FixedPointReport fixed_point(const Interval& k, double width) {
  require_positive(k);
  if (!(width > 0)) throw std::invalid_argument("fixed_point: width must be positive");
  const Interval kp1 = k + Interval(1);
  auto f = [&](const Rational& u) { return pow_k(at(u), kp1) + at(u) - Interval(1); };
  Rational lo(0), hi(1);
  const Rational target = Rational::inverse_power_of_two(static_cast<unsigned long>(std::max(1.0, -std::log2(width))) + 1);
  while (hi - lo > target) {
    Rational mid = (lo + hi) / Rational(2);
    Interval v = f(mid);
    if (v.certainly_negative()) lo = mid;
    else if (v.certainly_positive()) hi = mid;
    else break;
  }
  FixedPointReport rep;
  rep.u = Interval(lo, hi);
  Interval d1 = -(k * pow_k(rep.u, kp1));
  Interval d2 = -(k * (Interval(1) - rep.u));
  rep.derivative = d1.overlaps(d2) ? numerics::intersect(d1, d2) : d1;
  Interval mag = -rep.derivative;
  if (mag.certainly_less(Interval(1))) rep.stability = Stability::Attracting;
  else if (mag.certainly_greater(Interval(1))) rep.stability = Stability::Repelling;
  return rep;
}

Interval g_critical(const Interval& k) {
  if (k.lower() == 0 && k.upper() == 0) return Interval(2);
  require_positive(k);
  return Interval(1) + pow(k, k / (k + Interval(1)));
}

Interval critical_k0(double tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("critical_k0: tolerance must be positive");
  auto phi = [](const Rational& k) { return g_critical(at(k)) - at(k); };
  Rational lo(4), hi(5);
  if (!phi(lo).certainly_positive() || !phi(hi).certainly_negative())
    throw std::logic_error("critical_k0: bracket [4, 5] does not straddle the root");
  while ((hi - lo).to_double() > tolerance) {
    Rational mid = (lo + hi) / Rational(2);
    Interval v = phi(mid);
    if (v.certainly_positive()) lo = mid;
    else if (v.certainly_negative()) hi = mid;
    else break;
  }
  return Interval(lo, hi);
}

Period2Report period2_orbit(const Interval& k, long max_iterations) {
  require_positive(k);
  Period2Report rep;
  const long prec = static_cast<long>(numerics::working_precision());
  const double stop = std::ldexp(1.0, static_cast<int>(-(prec - 40)));

  // Approximate limit of the even iterates.
  Interval x(0);
  double last_step = 1;
  while (rep.iterations < max_iterations) {
    Interval next = apply_T(k, apply_T(k, x).midpoint()).midpoint();
    last_step = std::fabs((next - x).upper());
    x = next;
    rep.iterations += 2;
    if (last_step < stop) break;
  }

  const Interval u = fixed_point(k, std::ldexp(1.0, static_cast<int>(-(prec - 24)))).u;
  const Rational a = x.lower_rational();
  double delta = std::max(std::ldexp(1.0, static_cast<int>(-(prec - 60))), 1e3 * last_step);
  for (int attempt = 0; attempt < 200 && delta < 0.25; ++attempt, delta *= 4) {
    Rational rad = Rational(Interval::from_double(delta).lower_rational());
    Rational jlo = a - rad;
    Rational jhi = a + rad;
    if (jlo.sign() < 0) jlo = Rational(0);
    if (jhi > Rational(1)) jhi = Rational(1);
    const Interval J(jlo, jhi);
    // T^2 is increasing, so its image of J is spanned by the endpoint images.
    const Interval img_lo = apply_T(k, apply_T(k, at(jlo)));
    const Interval img_hi = apply_T(k, apply_T(k, at(jhi)));
    if (!(img_lo.lower_rational() >= jlo && img_hi.upper_rational() <= jhi)) continue;
    const Interval TJ = apply_T(k, J);
    const Interval slope = abs_T_derivative(k, J) * abs_T_derivative(k, TJ);
    if (!slope.certainly_less(Interval(1))) continue;
    rep.certified = true;
    rep.attracting = true;
    const Interval p1 = Interval::hull(img_lo, img_hi);
    if (J.contains(u)) {
      rep.merged = true;
      rep.p1 = u;
      rep.p2 = u;
    } else {
      rep.merged = false;
      rep.p1 = p1;
      rep.p2 = apply_T(k, p1);
    }
    return rep;
  }
  rep.p1 = x;
  rep.p2 = apply_T(k, x);
  rep.merged = rep.p1.overlaps(u);
  return rep;
}

Polynomial inflection_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("inflection_polynomial: k must be positive");
  const Polynomial y = Polynomial::variable();
  const Polynomial K(k);
  const Polynomial yk = (y + Polynomial(1)).pow(static_cast<unsigned>(k));
  return K * K * y * (Polynomial(1) - yk) - y + K + (K - y) * yk - Polynomial(1) - yk;
}

InflectionVerdict inflection_certificate(int k) {
  if (k < 3) throw std::invalid_argument("inflection_certificate requires k >= 3");
  InflectionVerdict v;
  v.k = k;
  v.j = inflection_polynomial(k);
  v.constant_positive = v.j.coeff(0).sign() > 0;
  v.linear_positive = v.j.coeff(1).sign() > 0;
  v.higher_negative = v.j.degree() >= 2;
  v.formula_matches = true;
  const unsigned long ku = static_cast<unsigned long>(k);
  for (long i = 2; i <= v.j.degree(); ++i) {
    const auto iu = static_cast<unsigned long>(i);
    Rational expected = Rational(k - 1) * Rational(numerics::binomial(ku, iu)) -
                        Rational(k * k + 1) * Rational(numerics::binomial(ku, iu - 1));
    const Rational c = v.j.coeff(iu);
    v.higher_negative = v.higher_negative && c.sign() < 0;
    v.formula_matches = v.formula_matches && c == expected;
  }
  v.formula_matches = v.formula_matches && v.j.degree() == k + 1;
  v.positive_roots = numerics::sturm_count(v.j, 0, numerics::cauchy_root_bound(v.j)).count;
  return v;
}

std::vector<Rational> orbit_trace(int k, const Rational& start, long steps) {
  if (steps < 0) throw std::invalid_argument("orbit_trace: steps must be nonnegative");
  std::vector<Rational> out{start};
  for (long i = 0; i < steps; ++i) out.push_back(apply_T(k, out.back()));
  return out;
}

std::vector<Interval> orbit_trace(const Interval& k, const Interval& start, long steps) {
  if (steps < 0) throw std::invalid_argument("orbit_trace: steps must be nonnegative");
  std::vector<Interval> out{start};
  for (long i = 0; i < steps; ++i) out.push_back(apply_T(k, out.back()));
  return out;
}

std::vector<Vector<Rational>> orbit_trace(const TransitionMatrix& M, int k, const Vector<Rational>& start,
                                          long steps) {
  if (steps < 0) throw std::invalid_argument("orbit_trace: steps must be nonnegative");
  std::vector<Vector<Rational>> out{start};
  for (long i = 0; i < steps; ++i) out.push_back(apply_T(M, k, out.back()));
  return out;
}

}  // namespace treeshift
