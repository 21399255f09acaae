#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "treeshift/numerics/big.hpp"
#include "treeshift/numerics/interval.hpp"
#include "treeshift/numerics/polynomial.hpp"
#include "treeshift/numerics/sturm.hpp"

using namespace treeshift::numerics;

namespace {

// 60-digit references (OEIS A002194, A002162).
const char* kSqrt3 = "1.73205080756887729352744634150587236694280525381038062805580";
const char* kLog2 = "0.693147180559945309417232121458176568075500134360255254120680";

Rational random_rational(std::mt19937_64& rng, long lo_num, long hi_num, long den) {
  std::uniform_int_distribution<long> d(lo_num, hi_num);
  return Rational(d(rng), den);
}

Polynomial linear(const Rational& root) { return Polynomial(std::vector<Rational>{-root, Rational(1)}); }

}  // namespace

TEST_CASE("BigNat arithmetic and digits") {
  BigNat a = BigNat::parse("8143397");
  CHECK(a.decimal_digits() == 7);
  CHECK((a + BigNat(3)).to_string() == "8143400");
  CHECK(BigNat(5).pow(5) == BigNat(3125));
  CHECK(BigNat(0).is_zero());
  CHECK(binomial(5, 2) == BigNat(10));
  CHECK(binomial(7, 0) == BigNat(1));
  CHECK_THROWS(BigNat::parse("-3"));
}

TEST_CASE("Rational parsing accepts fractions and decimals") {
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse(".5952") == Rational(372, 625));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("1e-3") == Rational(1, 1000));
  CHECK(Rational::parse("2.5E2") == Rational(250));
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK(Rational(25, 41).to_decimal(4) == "0.6098");
  CHECK(Rational(3, 4).to_fraction_string() == "3/4");
  CHECK(Rational(2).to_fraction_string() == "2/1");
}

TEST_CASE("sqrt of an exact square is tight") {
  Interval s = sqrt(Interval(4));
  CHECK(s.contains(Rational(2)));
  CHECK(s.width_ulps() <= 1);
}

TEST_CASE("sqrt(3) brackets the reference and squares around 3") {
  Interval s = sqrt(Interval(3));
  CHECK(s.lower_rational() * s.lower_rational() <= Rational(3));
  CHECK(s.upper_rational() * s.upper_rational() >= Rational(3));
  CHECK(s.width_ulps() <= 2);
  // agreement with the reference to its 59 digits
  const Rational ref = Rational::parse(kSqrt3);
  CHECK(s.lower_rational() - ref < Rational::parse("1e-58"));
  CHECK(ref - s.upper_rational() < Rational::parse("1e-58"));
}

TEST_CASE("log(1) and log(2)") {
  Interval z = log(Interval(1));
  CHECK(z.contains(Rational(0)));
  CHECK(z.width() <= 1e-70);
  Interval l2 = log(Interval(2));
  const Rational ref = Rational::parse(kLog2);
  CHECK(l2.lower_rational() < ref + Rational::parse("1e-59"));
  CHECK(l2.upper_rational() > ref - Rational::parse("1e-59"));
  CHECK(l2.width() < 1e-70);
  CHECK(interval_elementary(ElementaryKind::Log, Interval(2)) == l2);
}

TEST_CASE("domain errors are raised") {
  CHECK_THROWS(sqrt(Interval(-1)));
  CHECK_THROWS(log(Interval(Rational(-1), Rational(1))));
  CHECK_THROWS(Interval(1) / Interval(Rational(-1), Rational(1)));
  CHECK_THROWS(set_working_precision(32));
}

TEST_CASE("precision guard restores the previous precision") {
  const unsigned before = working_precision();
  {
    PrecisionGuard g(80);
    CHECK(working_precision() == 80);
    CHECK(Interval(1).precision() == 80);
  }
  CHECK(working_precision() == before);
}

TEST_CASE("real powers") {
  Interval r = pow(Interval(2), Interval(Rational(1, 2)));
  CHECK(r.lower_rational() * r.lower_rational() <= Rational(2));
  CHECK(r.upper_rational() * r.upper_rational() >= Rational(2));
  CHECK(pow(Interval(0), Interval(3)).contains(Rational(0)));
  Interval c = pow(Interval(Rational(-1, 2)), 3ul);
  CHECK(c.contains(Rational(-1, 8)));
  CHECK(interval_elementary(ElementaryKind::Sqrt, Interval(9)).contains(Rational(3)));
}

TEST_CASE("golden ratio enclosure") {
  Interval g = golden_ratio();
  CHECK(g.lower_rational() * g.lower_rational() <= g.lower_rational() + Rational(1));
  CHECK(g.upper_rational() * g.upper_rational() >= g.upper_rational() + Rational(1));
}

TEST_CASE("poly_div_exact examples") {
  const Polynomial r = Polynomial::variable();
  const Polynomial p2 = r.pow(3) + r - Polynomial(1);
  const Polynomial d2 = Polynomial::from_terms({{0, 1}, {1, -2}, {2, 1}, {3, -2}, {4, 2}, {6, 1}});
  // d_2 equals p_2^2 exactly, so the quotient is +1.
  PolyDivision q = poly_div_exact(d2, p2 * p2);
  CHECK(q.quot == Polynomial(1));
  CHECK(q.rem.is_zero());

  PolyDivision id = poly_div_exact(p2, Polynomial(1));
  CHECK(id.quot == p2);
  CHECK(id.rem.is_zero());

  PolyDivision e = poly_div_exact(r * r + Polynomial(1), r);
  CHECK(e.quot == r);
  CHECK(e.rem == Polynomial(1));

  CHECK_THROWS_AS(poly_div_exact(r, Polynomial()), std::domain_error);
}

TEST_CASE("division recovers random quotient and remainder") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(0, 6);
  auto random_poly = [&](int d) {
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, -9, 9, 1 + static_cast<long>(rng() % 5)));
    if (c.back().is_zero()) c.back() = Rational(1);
    return Polynomial(c);
  };
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial den = random_poly(1 + deg(rng));
    Polynomial quot = random_poly(deg(rng));
    Polynomial rem = den.degree() > 0 ? random_poly(static_cast<int>(den.degree()) - 1) : Polynomial();
    PolyDivision out = poly_div_exact(den * quot + rem, den);
    CHECK(out.quot == quot);
    CHECK(out.rem == rem);
  }
}

TEST_CASE("polynomial utilities") {
  const Polynomial r = Polynomial::variable();
  Polynomial p = (r - Polynomial(1)).pow(2) * (r + Polynomial(2));
  CHECK(squarefree_part(p).degree() == 2);
  CHECK(gcd(p, p.derivative()).degree() == 1);
  CHECK((r.pow(3) * Polynomial(2)).shift_down(2) == r * Polynomial(2));
  CHECK_THROWS(r.shift_down(2));
  CHECK(p.valuation() == 0);
  CHECK(r.pow(4).valuation() == 4);
  CHECK(p(Rational(1)).is_zero());
  CHECK(p.sign_at(Rational(3)) > 0);
  CHECK(primitive_part(Polynomial(std::vector<Rational>{Rational(2, 3), Rational(4, 3)})) ==
        Polynomial(std::vector<Rational>{Rational(1), Rational(2)}));
}

TEST_CASE("sturm_count examples") {
  const Polynomial r = Polynomial::variable();
  CHECK(sturm_count(r.pow(3) + r - Polynomial(1), 0, 1).count == 1);
  CHECK(sturm_count(Polynomial(1), 0, 1).count == 0);
  CHECK(sturm_count(r * r - Polynomial(Rational(1, 4)), 0, 1).count == 1);
}

TEST_CASE("sturm_count on products of distinct linear factors") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> roots;
    while (roots.size() < 5) {
      Rational a = random_rational(rng, -12, 12, 4);
      if (std::find(roots.begin(), roots.end(), a) == roots.end()) roots.push_back(a);
    }
    Polynomial p(1);
    for (const auto& a : roots) p = p * linear(a);
    const Rational lo = random_rational(rng, -12, 0, 4);
    const Rational hi = random_rational(rng, 1, 12, 4);
    const auto expected =
        static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [&](const Rational& a) { return lo < a && a <= hi; }));
    CHECK(sturm_count(p, lo, hi).count == expected);
    // repeated factors do not change the count of distinct roots
    CHECK(sturm_count(p * linear(roots[0]), lo, hi).count == expected);
  }
}

TEST_CASE("sturm_count treats endpoint roots as half-open") {
  const Polynomial r = Polynomial::variable();
  Polynomial p = r * (r - Polynomial(1));  // roots 0 and 1
  SturmCount c = sturm_count(p, 0, 1);
  CHECK(c.count == 1);
  CHECK(c.lo_was_root);
  CHECK(c.hi_was_root);
  CHECK(sturm_count(p, Rational(-1, 2), 1).count == 2);
  CHECK(cauchy_root_bound(r * r - Polynomial(9)) >= Rational(3));
}

TEST_CASE("interval_eval examples") {
  const Polynomial r = Polynomial::variable();
  const Polynomial p = r.pow(3) + r - Polynomial(1);
  const Interval x(Rational(68, 100), Rational(69, 100));
  // bisection oracle: exact sign change across the bracket
  CHECK(p.sign_at(Rational(68, 100)) < 0);
  CHECK(p.sign_at(Rational(69, 100)) > 0);
  CHECK(interval_eval(p, x).contains_zero());
  CHECK(interval_eval(Polynomial(1), x) == Interval(1));
  CHECK(interval_eval(r, x) == x);
}

TEST_CASE("interval_eval encloses exact values and is inclusion monotone") {
  std::mt19937_64 rng(7);
  const Polynomial p = Polynomial::from_terms({{0, 1}, {1, -3}, {3, Rational(5, 2)}, {6, -1}, {9, Rational(1, 7)}});
  for (int trial = 0; trial < 100; ++trial) {
    Rational a = random_rational(rng, -200, 200, 100);
    Rational b = a + random_rational(rng, 0, 50, 100);
    Interval x(a, b);
    Interval px = interval_eval(p, x);
    for (int s = 0; s < 5; ++s) {
      Rational t = a + (b - a) * random_rational(rng, 0, 1000, 1000);
      CHECK(px.contains(p(t)));
    }
    Interval y(a - Rational(1, 10), b + Rational(1, 10));
    CHECK(interval_eval(p, y).contains(px));
  }
}
