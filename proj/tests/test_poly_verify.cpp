#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "treeshift/counts.hpp"
#include "treeshift/poly_verify.hpp"
#include "treeshift/published_polynomials.hpp"
#include "treeshift/strip_entropy.hpp"

using namespace treeshift;
using numerics::Interval;
using numerics::Rational;

namespace {

// n_k(r) = c^{2k} - (1 + r^k)^{k-1} (c^k + 1) with c = (1 + sqrt(1 + 4 r^{k-1})) / 2.
double nk_double(int k, double r) {
  const double c = (1 + std::sqrt(1 + 4 * std::pow(r, k - 1))) / 2;
  return std::pow(c, 2 * k) - std::pow(1 + std::pow(r, k), k - 1) * (std::pow(c, k) + 1);
}

}  // namespace

TEST_CASE("k = 2 certificate: q_2 = 1") {
  const MonotonicityCertificate c = certify_monotone(2);
  CHECK(c.q == Polynomial(1));
  CHECK(c.valid());
}

TEST_CASE("k = 3 certificate matches the q_3/4 listing") {
  const MonotonicityCertificate c = certify_monotone(3);
  const Polynomial expected = Polynomial::from_terms({{0, 1}, {1, 2}, {3, 4}, {4, 1}, {6, 4}, {7, -2}, {10, -1}});
  CHECK(c.q == expected);
  CHECK(c.valid());
}

TEST_CASE("k = 5 certificate matches the leading and trailing listing terms") {
  const MonotonicityCertificate c = certify_monotone(5);
  const long expected_low[] = {1, 2, 3, 4, 0, 8, 18, 30};
  for (std::size_t i = 0; i < 8; ++i) CHECK(c.q.coeff(i) == Rational(expected_low[i]));
  CHECK(c.q.degree() == 48);
  CHECK(c.q.leading() == Rational(-1));
  CHECK(c.valid());
}

TEST_CASE("certificates for k = 2..8") {
  for (int k = 2; k <= 8; ++k) {
    CAPTURE(k);
    const MonotonicityCertificate c = certify_monotone(k);
    CHECK(c.remainder_zero);
    CHECK(c.remainder.is_zero());
    CHECK(c.p * c.p * c.q == c.d);  // independent of the division routine
    CHECK(c.roots_in_01 == 0);
    CHECK(c.value_at_0 >= Rational(1));
    CHECK(c.sign_split.rad_free_negative);
    CHECK(c.p_has_no_rational_root);
    CHECK(c.levels_ok);
    REQUIRE(c.matches_published.has_value());
    CHECK(*c.matches_published);
    CHECK(c.valid());
    CHECK(monotone_certified(k));
  }
}

TEST_CASE("conjugate square equals d") {
  for (int k = 2; k <= 5; ++k) {
    const RadicalExpr e = build_nk(k);
    const Polynomial d = conjugate_square(e);
    CHECK(d == e.rad_free * e.rad_free - e.rad_coeff * e.rad_coeff * e.radicand);
    CHECK(e.radicand == Polynomial(1) + Polynomial(4) * Polynomial::monomial(1, static_cast<std::size_t>(k - 1)));
    CHECK(p_k(k) == Polynomial::monomial(1, static_cast<std::size_t>(k + 1)) + Polynomial::variable() - Polynomial(1));
  }
}

TEST_CASE("published listings reproduce exactly") {
  for (int k = 2; k <= 8; ++k) {
    const auto pub = published_polynomials(k);
    REQUIRE(pub.has_value());
    const RadicalExpr e = build_nk(k);
    CHECK(pub->A == e.rad_free.scaled(pub->rad_scale));
    CHECK(pub->rad_coeff == e.rad_coeff.scaled(pub->rad_scale));
    CHECK(pub->d == conjugate_square(e).scaled(pub->d_scale));
    CHECK(pub->q == certify_monotone(k).q);
  }
  CHECK_FALSE(published_polynomials(9).has_value());
}

TEST_CASE("n_k is negative at random rationals") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(0, 1000);
  for (int k = 2; k <= 8; ++k) {
    const RadicalExpr e = build_nk(k);
    for (int trial = 0; trial < 100; ++trial) {
      const Rational r(num(rng), 1000);
      const Interval v = e.evaluate(Interval(r));
      CHECK(v.upper() <= 0);
      if (!p_k(k)(r).is_zero()) CHECK(v.certainly_negative());
      const double ref = nk_double(k, r.to_double());
      CHECK(std::fabs(v.lower() - ref) <= 1e-9 * (1 + std::fabs(ref)));
    }
  }
}

TEST_CASE("p_k never vanishes at the recursion ratios") {
  for (int k = 2; k <= 8; ++k)
    for (long n = 0; n <= 6; ++n) CHECK_FALSE(p_k(k)(gm_ratio(gm_state(k, n))).is_zero());
}

TEST_CASE("rational_roots") {
  const Polynomial r = Polynomial::variable();
  auto roots = rational_roots((Polynomial(2) * r - Polynomial(1)) * (r + Polynomial(3)));
  std::sort(roots.begin(), roots.end());
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-3));
  CHECK(roots[1] == Rational(1, 2));
  for (int k = 2; k <= 8; ++k) CHECK(rational_roots(p_k(k)).empty());
}

TEST_CASE("equivalences at the root of p_k") {
  const EquivalenceVerdict v2 = equivalences_check(2);
  CHECK(std::fabs(v2.root.lower() - 0.682328) < 1e-6);
  CHECK(v2.cr_residual.contains_zero());
  for (int k = 2; k <= 8; ++k) {
    const EquivalenceVerdict v = equivalences_check(k);
    CHECK(v.fixed_residual.contains_zero());
    CHECK(v.cr_residual.contains_zero());
    CHECK(v.c_residual.contains_zero());
    CHECK(v.eqb_residual.contains_zero());
    CHECK(v.holds);
  }
}

TEST_CASE("endpoint checks") {
  const EndpointVerdict v1 = endpoint_checks(1);
  CHECK(v1.holds);
  // ((g+1)/2)^2 < (g^2+1)/2 for the golden ratio g
  const double g = (1 + std::sqrt(5.0)) / 2;
  CHECK((g + 1) * (g + 1) / 4 < (g * g + 1) / 2);

  const EndpointVerdict v2 = endpoint_checks(2);
  CHECK(v2.holds);
  REQUIRE(v2.at_0.has_value());
  CHECK(v2.at_0->overlaps(numerics::golden_ratio() - Interval(1)));
  CHECK(endpoint_checks(6).holds);
  REQUIRE(endpoint_checks(6).at_1.has_value());
  CHECK(endpoint_checks(6).at_1->certainly_positive());
}

TEST_CASE("q_k asymptote probe") {
  const auto a = qk_asymptote_probe(2, {Rational(0)});
  CHECK(a[0].q == Rational(1));
  CHECK(a[0].series == Rational(1));
  const auto b = qk_asymptote_probe(8, {Rational(0), Rational(1, 2)});
  CHECK(b[0].q == Rational(1));
  CHECK(b[0].series == Rational(1));
  CHECK(b[1].q == certify_monotone(8).q(Rational(1, 2)));
  CHECK(b[1].series == Rational(4));
}

TEST_CASE("certified k gives strictly increasing strip values") {
  for (int k = 2; k <= 8; ++k) {
    REQUIRE(monotone_certified(k));
    GoldenChain chain(k);
    for (long n = 1; n <= 7; ++n) CHECK(strip_h(chain, n).h.certainly_less(strip_h(chain, n + 1).h));
  }
}
