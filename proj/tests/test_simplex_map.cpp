#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "treeshift/counts.hpp"
#include "treeshift/simplex_map.hpp"

using namespace treeshift;
using numerics::Interval;
using numerics::Rational;

namespace {

bool near(const Interval& v, double x, double tol) { return v.lower() - tol <= x && x <= v.upper() + tol; }

// Root of k = 1 + k^{k/(k+1)} on [4, 5] by double bisection.
double k0_oracle() {
  double lo = 4, hi = 5;
  for (int i = 0; i < 100; ++i) {
    const double mid = (lo + hi) / 2;
    (1 + std::pow(mid, mid / (mid + 1)) > mid ? lo : hi) = mid;
  }
  return lo;
}

double T(double k, double x) { return 1 / (1 + std::pow(x, k)); }

}  // namespace

TEST_CASE("apply_T examples") {
  CHECK(apply_T(2, Rational(0)) == Rational(1));
  CHECK(apply_T(2, Rational(1)) == Rational(1, 2));
  CHECK(apply_T(Interval(2), Interval(0)).contains(Rational(1)));
  Vector<Rational> r(2);
  r << Rational(1, 2), Rational(1, 2);
  Vector<Rational> img = apply_T(TransitionMatrix::golden(), 2, r);
  CHECK(img(0) == Rational(4, 5));
  CHECK(img(1) == Rational(1, 5));
  const FixedPointReport fp = fixed_point(Interval(2));
  CHECK(apply_T(Interval(2), fp.u).overlaps(fp.u));
}

TEST_CASE("T is decreasing") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(0, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(num(rng), 1000), b(num(rng), 1000);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    for (int k = 1; k <= 6; ++k) CHECK(apply_T(k, a) > apply_T(k, b));
  }
}

TEST_CASE("fixed_point") {
  const FixedPointReport fp = fixed_point(Interval(2));
  CHECK(near(fp.u, 0.682328, 1e-6));
  CHECK(near(fp.derivative, -0.635345, 1e-6));
  CHECK(fp.stability == Stability::Attracting);
  CHECK(fp.u.width() <= 1e-12);
  // residual of u (1 + u^k) = 1
  const Interval res = fp.u * (Interval(1) + numerics::pow(fp.u, 2ul)) - Interval(1);
  CHECK(res.lower() >= -1e-10);
  CHECK(res.upper() <= 1e-10);
  // -k u^{k+1} and -k (1 - u) agree
  const Interval d1 = -(Interval(2) * numerics::pow(fp.u, 3ul));
  const Interval d2 = -(Interval(2) * (Interval(1) - fp.u));
  CHECK(d1.overlaps(d2));

  CHECK(fixed_point(Interval(7)).stability == Stability::Repelling);
  for (int k = 2; k <= 4; ++k) CHECK(fixed_point(Interval(k)).stability == Stability::Attracting);
  for (int k = 5; k <= 8; ++k) CHECK(fixed_point(Interval(k)).stability == Stability::Repelling);
  // non-integer exponent
  const FixedPointReport half = fixed_point(Interval(Rational(5, 2)));
  CHECK(near(half.u, 0.7, 0.1));
}

TEST_CASE("critical_k0 and g") {
  const Interval k0 = critical_k0(1e-3);
  CHECK(k0.width() <= 1e-3);
  CHECK(near(k0, k0_oracle(), 1e-9));
  CHECK(k0.lower() > 4);
  CHECK(k0.upper() < 5);
  CHECK(near(critical_k0(1e-12), k0_oracle(), 1e-10));
  CHECK(near(g_critical(Interval(5)), 4.82362, 1e-4));
  CHECK(g_critical(Interval(0)).contains(Rational(2)));
  // stability flips across k0
  CHECK(fixed_point(Interval(k0.lower_rational() - Rational(1, 100))).stability == Stability::Attracting);
  CHECK(fixed_point(Interval(k0.upper_rational() + Rational(1, 100))).stability == Stability::Repelling);
}

TEST_CASE("period-2 orbit") {
  for (int k = 2; k <= 4; ++k) {
    const Period2Report p = period2_orbit(Interval(k));
    CHECK(p.certified);
    CHECK(p.attracting);
    CHECK(p.merged);
    CHECK(p.p1.overlaps(fixed_point(Interval(k)).u));
  }
  for (int k = 5; k <= 8; ++k) {
    const Period2Report p = period2_orbit(Interval(k));
    const Interval u = fixed_point(Interval(k)).u;
    CHECK(p.certified);
    CHECK(p.attracting);
    CHECK_FALSE(p.merged);
    CHECK(p.p1.certainly_less(u));
    CHECK(u.certainly_less(p.p2));
    // T swaps the two points; T[0, p1] = [p2, 1] and T[p2, 1] = [1/2, p1]
    CHECK(apply_T(Interval(k), p.p1).overlaps(p.p2));
    CHECK(apply_T(Interval(k), p.p2).overlaps(p.p1));
    CHECK(p.p1.lower() >= 0.5);
  }
}

TEST_CASE("the 2-cycle attracts sampled starts for k = 7") {
  const Period2Report p = period2_orbit(Interval(7));
  const double p1 = p.p1.lower(), p2 = p.p2.lower();
  for (int i = 0; i <= 20; ++i) {
    double x = i / 20.0;
    for (int s = 0; s < 4000; ++s) x = T(7, x);
    CHECK(std::min(std::fabs(x - p1), std::fabs(x - p2)) < 1e-9);
  }
}

TEST_CASE("inflection certificate") {
  const Polynomial j3 = inflection_polynomial(3);
  CHECK(j3.coeff(2) == Rational(-24));
  for (int k = 3; k <= 8; ++k) {
    const InflectionVerdict v = inflection_certificate(k);
    CHECK(v.constant_positive);
    CHECK(v.linear_positive);
    CHECK(v.higher_negative);
    CHECK(v.formula_matches);
    CHECK(v.positive_roots == 1);
    CHECK(v.holds());
    CHECK(v.j.coeff(0) == Rational(2 * k - 2));
    CHECK(v.j.coeff(1) == Rational((k - 2) * (k + 1)));
  }
  CHECK_THROWS(inflection_certificate(2));
}

TEST_CASE("orbit_trace") {
  const auto orbit = orbit_trace(2, Rational(1, 2), 3);
  REQUIRE(orbit.size() == 4);
  CHECK(orbit[1] == Rational(4, 5));
  CHECK(orbit[2] == Rational(25, 41));
  CHECK(orbit[3] == Rational(1681, 2306));
  // conjugacy with the counting recursion
  const auto long_orbit = orbit_trace(3, Rational(1, 2), 7);
  for (int n = 0; n <= 7; ++n) CHECK(long_orbit[static_cast<std::size_t>(n)] == gm_ratio(gm_state(3, n)));

  const FixedPointReport fp = fixed_point(Interval(2));
  for (const auto& x : orbit_trace(Interval(2), fp.u, 5)) CHECK(x.overlaps(fp.u));

  Vector<Rational> bary(3);
  bary << Rational(1, 3), Rational(1, 3), Rational(1, 3);
  for (const auto& v : orbit_trace(TransitionMatrix::full_shift(3), 2, bary, 4)) CHECK(v == bary);
}
