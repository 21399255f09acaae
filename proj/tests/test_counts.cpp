#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "treeshift/counts.hpp"
#include "treeshift/enumeration.hpp"

using namespace treeshift;
using numerics::Interval;
using numerics::Rational;

namespace {

// Golden counts by the plain recursion in 64-bit integers (small levels only).
std::pair<unsigned long long, unsigned long long> golden_u64(int k, int n) {
  unsigned long long b0 = 1, b1 = 0;
  for (int i = -1; i < n; ++i) {
    unsigned long long t = b0 + b1, nb0 = 1, nb1 = 1;
    for (int j = 0; j < k; ++j) {
      nb0 *= t;
      nb1 *= b0;
    }
    b0 = nb0;
    b1 = nb1;
  }
  return {b0, b1};
}

bool near(const Interval& v, double x, double tol) { return v.lower() - tol <= x && x <= v.upper() + tol; }

}  // namespace

TEST_CASE("gm_step reproduces the k=2 counts") {
  GoldenCountState s = gm_state(2, 0);
  CHECK(s.b0 == BigNat(1));
  CHECK(s.b1 == BigNat(1));
  s = gm_step(s);
  CHECK(s.b0 == BigNat(4));
  CHECK(s.b1 == BigNat(1));
  CHECK(s.total() == BigNat(5));
  s = gm_step(s);
  CHECK(s.b0 == BigNat(25));
  CHECK(s.b1 == BigNat(16));
  CHECK(s.total() == BigNat(41));
  GoldenCountState s4 = gm_state(2, 4);
  CHECK(s4.total() == BigNat(8143397));
  CHECK(s4.b0 == BigNat(5317636));
}

TEST_CASE("gm_state agrees with a 64-bit recursion") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 0; n <= 2; ++n) {
      auto [b0, b1] = golden_u64(k, n);
      GoldenCountState s = gm_state(k, n);
      CHECK(s.b0 == BigNat(b0));
      CHECK(s.b1 == BigNat(b1));
    }
}

TEST_CASE("gm_ratio examples") {
  CHECK(gm_ratio(gm_state(2, 0)) == Rational(1, 2));
  CHECK(gm_ratio(gm_state(2, 1)) == Rational(4, 5));
  CHECK(gm_ratio(gm_state(2, 2)) == Rational(25, 41));
  CHECK(gm_ratio(gm_state(2, -1)) == Rational(1));
}

TEST_CASE("invalid levels and arities") {
  CHECK_THROWS_AS(gm_state(2, -2), std::invalid_argument);
  CHECK_THROWS_AS(gm_state(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(delta_size(2, -1), std::invalid_argument);
  CHECK_THROWS(entropy_upper_bound(gm_state(2, -1)));
}

TEST_CASE("delta_size") {
  CHECK(delta_size(2, 4) == BigNat(31));
  CHECK(delta_size(3, 2) == BigNat(13));
  CHECK(delta_size(5, 2) == BigNat(31));
}

TEST_CASE("general_step examples") {
  const TransitionMatrix G = TransitionMatrix::golden();
  GeneralCountState s = GeneralCountState::initial(G, 2);
  REQUIRE(s.ratios);
  CHECK((*s.ratios)(0) == Rational(1, 2));
  s = general_step(s);
  REQUIRE(s.ratios);
  CHECK((*s.ratios)(0) == Rational(4, 5));
  CHECK((*s.ratios)(1) == Rational(1, 5));

  const TransitionMatrix F = TransitionMatrix::full_shift(2);
  GeneralCountState f = GeneralCountState::initial(F, 2);
  f.ratios = Vector<Rational>(2);
  (*f.ratios)(0) = Rational(1, 7);
  (*f.ratios)(1) = Rational(6, 7);
  f = general_step(f);
  CHECK((*f.ratios)(0) == Rational(1, 2));
  CHECK((*f.ratios)(1) == Rational(1, 2));

  TransitionMatrix::Storage id = TransitionMatrix::Storage::Identity(2, 2);
  CHECK_THROWS_AS(TransitionMatrix{id}, std::invalid_argument);
}

TEST_CASE("general ratios equal the golden ratios exactly") {
  const TransitionMatrix G = TransitionMatrix::golden();
  for (int k = 2; k <= 3; ++k) {
    GeneralCountState s = GeneralCountState::initial(G, k);
    GoldenCountState g = gm_state(k, 0);
    for (int n = 0; n <= 6; ++n) {
      REQUIRE(s.ratios);
      CHECK((*s.ratios)(0) == gm_ratio(g));
      s = general_step(s);
      g = gm_step(g);
    }
  }
}

TEST_CASE("log of the exact total sits inside the general log enclosure") {
  const TransitionMatrix G = TransitionMatrix::golden();
  GeneralCountState s = GeneralCountState::initial(G, 2);
  for (int n = 0; n <= 6; ++n) {
    const Interval exact = numerics::log(gm_state(2, n).total());
    CHECK(s.log_mag.overlaps(exact));
    s = general_step(s);
  }
}

TEST_CASE("general_counts matches the golden recursion") {
  const TransitionMatrix G = TransitionMatrix::golden();
  for (int n = 0; n <= 5; ++n) {
    auto x = general_counts(G, 2, n);
    GoldenCountState g = gm_state(2, n);
    CHECK(x[0] == g.b0);
    CHECK(x[1] == g.b1);
  }
  CHECK(general_total(TransitionMatrix::full_shift(3), 2, 1) == BigNat(27));
}

TEST_CASE("entropy_upper_bound examples") {
  CHECK(near(entropy_upper_bound(gm_state(2, 2)), std::log(41.0) / 7, 1e-14));
  // B_2 for k = 3 from the 64-bit recursion: 729 + 512
  auto [b0, b1] = golden_u64(3, 2);
  CHECK(b0 + b1 == 1241);
  const Interval u3 = entropy_upper_bound(gm_state(3, 2));
  CHECK(near(u3, std::log(1241.0) / 13, 1e-14));
  CHECK(std::fabs(u3.lower() - 0.548) < 5e-4);

  const TransitionMatrix F = TransitionMatrix::full_shift(2);
  for (long n = 0; n <= 6; ++n) {
    const Interval u = entropy_upper_bound(general_state(F, 2, n));
    CHECK(u.overlaps(numerics::log(Interval(2))));
    CHECK(u.width() < 1e-60);
  }
}

TEST_CASE("upper bounds decrease towards the infimum") {
  for (int k = 2; k <= 3; ++k) {
    GoldenChain chain(k);
    Interval prev = entropy_upper_bound(k, chain.level(0));
    for (long n = 1; n <= 10; ++n) {
      const Interval cur = entropy_upper_bound(k, chain.level(n));
      CHECK(cur.certainly_less(prev));
      prev = cur;
    }
  }
}

TEST_CASE("interval regime encloses the exact regime") {
  GoldenChain exact(2);
  GoldenChain coarse(2, CountOptions{3});
  for (long n = 0; n <= 9; ++n) {
    const GoldenLevel& a = exact.level(n);
    const GoldenLevel& b = coarse.level(n);
    REQUIRE(a.ratio);
    CHECK(b.ratio_enclosure.contains(*a.ratio));
    CHECK(b.log_total.overlaps(a.log_total));
    if (n >= 4) CHECK_FALSE(b.exact.has_value());
  }
}

TEST_CASE("deep levels run in log space") {
  GoldenChain chain(2);
  const GoldenLevel& lvl = chain.level(40);
  CHECK_FALSE(lvl.exact.has_value());
  CHECK(lvl.log_total.is_finite());
  CHECK(entropy_upper_bound(2, lvl).width() < 1e-40);
}

TEST_CASE("golden totals equal brute-force counts") {
  for (int n = 0; n <= 3; ++n)
    CHECK(gm_state(2, n).total() == enumerate_pattern(TransitionMatrix::golden(), Pattern::delta(2, n)).count);
  for (int n = 0; n <= 2; ++n)
    CHECK(gm_state(3, n).total() == enumerate_pattern(TransitionMatrix::golden(), Pattern::delta(3, n)).count);
}

TEST_CASE("matrix file parsing") {
  std::istringstream ok("3\n1 1 0\n1 0 1\n0 1 1\n");
  TransitionMatrix M = TransitionMatrix::parse(ok);
  CHECK(M.size() == 3);
  CHECK(M(1, 2) == 1);
  std::istringstream golden("2 1 1 1 0");
  CHECK(TransitionMatrix::parse(golden).is_golden());
  std::istringstream reducible("2\n1 0\n0 1\n");
  CHECK_THROWS_AS(TransitionMatrix::parse(reducible), std::invalid_argument);
  std::istringstream short_input("2\n1 1\n1\n");
  CHECK_THROWS_AS(TransitionMatrix::parse(short_input), std::invalid_argument);
  std::istringstream trailing("2\n1 1\n1 0\n7\n");
  CHECK_THROWS_AS(TransitionMatrix::parse(trailing), std::invalid_argument);
  std::istringstream bad_entry("2\n1 2\n1 0\n");
  CHECK_THROWS_AS(TransitionMatrix::parse(bad_entry), std::invalid_argument);
  CHECK(TransitionMatrix::golden().to_string() == "[[1,1],[1,0]]");
  CHECK(TransitionMatrix::full_shift(3).is_full_shift());
}
