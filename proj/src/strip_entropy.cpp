#include "treeshift/strip_entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "treeshift/poly_verify.hpp"

namespace treeshift {

using numerics::log;
using numerics::pow;
using numerics::sqrt;

namespace {

Interval k_power(int k, long e) { return Interval(BigNat(static_cast<std::uint64_t>(k)).pow(static_cast<unsigned long>(e))); }

Interval log2_iv() { return log(Interval(2)); }

// 1 + r^k from the chain, exact when the ratio is.
Interval one_plus_rk(const GoldenLevel& lvl, int k) {
  if (lvl.ratio) return Interval(Rational(1) + lvl.ratio->pow(k));
  return Interval(1) + pow(lvl.ratio_enclosure, static_cast<unsigned long>(k));
}

}  // namespace

Interval eigen_ratio(int k, const Interval& r) {
  Interval rad = Interval(1) + Interval(4) * pow(r, static_cast<unsigned long>(k - 1));
  return (Interval(1) + sqrt(rad)) / Interval(2);
}

LambdaEnclosure golden_lambda(int k, const Interval& r, const Interval& log_b) {
  if (k < 2) throw std::invalid_argument("golden_lambda: k must be at least 2");
  if (r.lower() < 0 || r.upper() > 1) throw std::invalid_argument("golden_lambda: ratio outside [0, 1]");
  LambdaEnclosure out;
  out.eigen_ratio = eigen_ratio(k, r);
  out.log_lambda = Interval(k - 1) * log_b + log(out.eigen_ratio);
  return out;
}

StripReport strip_h(GoldenChain& chain, long n) {
  if (n < 0) throw std::invalid_argument("strip_h: n must be nonnegative");
  const int k = chain.k();
  const GoldenLevel& lvl = chain.level(n - 1);
  LambdaEnclosure lam = golden_lambda(k, lvl.ratio_enclosure, lvl.log_total);
  StripReport rep;
  rep.k = k;
  rep.n = n;
  rep.log_lambda = lam.log_lambda;
  rep.eigen_ratio = lam.eigen_ratio;
  rep.h = lam.log_lambda / k_power(k, n);
  return rep;
}

StripReport strip_h(int k, long n) {
  if (n < 1) throw std::invalid_argument("strip_h: n must be at least 1");
  GoldenChain chain(k);
  return strip_h(chain, n);
}

Interval h1_entropy() {
  GoldenChain chain(2);
  return strip_h(chain, 0).h;
}

Interval SeriesAccumulator::enclosure() const {
  return partial + tail;
}

SeriesAccumulator series_partial(GoldenChain& chain, long N) {
  if (N < 0) throw std::invalid_argument("series_partial: N must be nonnegative");
  const int k = chain.k();
  SeriesAccumulator acc;
  acc.k = k;
  acc.terms_taken = N;
  Interval sum(0);
  for (long i = 1; i <= N; ++i) sum += log(one_plus_rk(chain.level(i - 1), k)) / k_power(k, i + 1);
  acc.partial = Interval(k - 1) * (log2_iv() / Interval(k) + sum);
  acc.tail = Interval::hull(Interval(0), log2_iv() / k_power(k, N + 1));
  return acc;
}

SeriesAccumulator series_partial(int k, long N) {
  // Only ratios enter the series, so exact counts beyond the working
  // precision buy nothing; switch to intervals early.
  const std::size_t cap = numerics::working_precision() / 3 + 10;
  GoldenChain chain(k, CountOptions{cap});
  return series_partial(chain, N);
}

BoundsPair bounds_LU(int k) {
  if (k < 2) throw std::invalid_argument("bounds_LU: k must be at least 2");
  const Rational r0(1, 2);
  const Rational s0 = Rational(1) + r0.pow(k);  // 1 + r_0^k
  const Rational r1 = Rational(1) / s0;
  const Interval K(k);
  const Interval head = Interval(k - 1) / K * log2_iv();
  const Interval l0 = log(Interval(s0));
  const Interval l1 = log(Interval(Rational(1) + r1.pow(k)));
  const Interval big = log(Interval(Rational(1) + s0.pow(k)));  // log[1 + (1 + r_0^k)^k]

  BoundsPair b;
  b.k = k;
  b.L = head + Interval(k - 1) / (K * K) * l0 + Interval(k - 1) / (K * K * K) * l1;
  b.U = head + Interval(k - 1) / (K * K) * l0 + l1 / (K * K);
  b.L_closed = head + Interval(k - 1) / (K * K * K) * big;
  b.U_closed = head + big / (K * K) - l0 / (K * K);
  if (!b.L.overlaps(b.L_closed) || !b.U.overlaps(b.U_closed))
    throw std::logic_error("bounds_LU: the two forms of L(k), U(k) disagree");
  return b;
}

DimIncreaseVerdict dim_increase_check(int k) {
  if (k < 6) throw std::invalid_argument("dim_increase_check requires k >= 6");
  DimIncreaseVerdict v;
  v.k = k;
  Rational a(k - 1, k);
  v.lhs = pow(Interval(2), Interval(a + a.pow(3)));
  Rational x = Rational(1) + Rational::inverse_power_of_two(static_cast<unsigned long>(k - 1));
  v.rhs = Interval(Rational(1) + x.pow(k - 1));
  v.inequality_holds = v.rhs.certainly_less(v.lhs);
  v.L_k = bounds_LU(k).L;
  v.U_prev = bounds_LU(k - 1).U;
  v.bounds_separated = v.U_prev.certainly_less(v.L_k);
  return v;
}

CrossDimVerdict cross_dim_chain(int k, long m, long n) {
  if (k < 1) throw std::invalid_argument("cross_dim_chain: k must be at least 1");
  if (n < 1) throw std::invalid_argument("cross_dim_chain: n must be at least 1");
  CrossDimVerdict v;
  v.k = k;
  v.m = m;
  v.n = n;
  if (k == 1) {
    v.upper = h1_entropy();
  } else {
    if (m < 0) throw std::invalid_argument("cross_dim_chain: m must be nonnegative");
    GoldenChain chain(k);
    v.upper = entropy_upper_bound(k, chain.level(m));
  }
  v.lower = strip_h(k + 1, n).h;
  v.monotone_certified = monotone_certified(k + 1);
  return v;
}

Interval perron_root(const Matrix<Interval>& C) {
  const Eigen::Index d = C.rows();
  if (d != C.cols() || d < 1) throw std::invalid_argument("perron_root: square matrix required");
  if (d == 1) return C(0, 0);
  if (d == 2) {
    Interval tr = C(0, 0) + C(1, 1);
    Interval disc = numerics::square(C(0, 0) - C(1, 1)) + Interval(4) * C(0, 1) * C(1, 0);
    return (tr + sqrt(disc)) / Interval(2);
  }
  // Power iteration on C + I (aperiodic, same Perron vector), then
  // Collatz-Wielandt: min_i (Cv)_i / v_i <= mu <= max_i (Cv)_i / v_i for v > 0.
  Matrix<Interval> shifted = C;
  for (Eigen::Index i = 0; i < d; ++i) shifted(i, i) += Interval(1);
  Vector<Interval> v = Vector<Interval>::Constant(d, Interval(1));
  Interval best;
  bool have = false;
  const double tol = std::ldexp(1.0, -static_cast<int>(numerics::working_precision()) + 40);
  for (int it = 1; it <= 20000; ++it) {
    Vector<Interval> w = shifted * v;
    Interval top = w(0);
    for (Eigen::Index i = 1; i < d; ++i) top = numerics::max(top, w(i));
    for (Eigen::Index i = 0; i < d; ++i) v(i) = (w(i) / top).midpoint();
    if (it % 8 != 0) continue;
    Vector<Interval> cv = C * v;
    Interval lo = cv(0) / v(0);
    Interval hi = lo;
    for (Eigen::Index i = 1; i < d; ++i) {
      Interval q = cv(i) / v(i);
      lo = numerics::min(lo, q);
      hi = numerics::max(hi, q);
    }
    Interval enc = Interval::hull(lo, hi);
    if (!have || enc.width() < best.width()) {
      best = enc;
      have = true;
    }
    if (best.width() <= tol * best.upper()) break;
  }
  if (!have || !best.certainly_positive()) throw std::runtime_error("perron_root: enclosure did not converge");
  return best;
}

StripReport general_strip_h(const TransitionMatrix& M, int k, long n, CountOptions opts) {
  if (n < 1) throw std::invalid_argument("general_strip_h: n must be at least 1");
  GeneralCountState s = general_state(M, k, n - 1, opts);
  const int d = M.size();
  const Vector<Interval> row_dot = M.storage().cast<Interval>() * s.ratio_enclosure;
  Matrix<Interval> C(d, d);
  for (int i = 0; i < d; ++i) {
    Interval w = pow(row_dot(i), static_cast<unsigned long>(k - 1));
    for (int j = 0; j < d; ++j) C(i, j) = M(i, j) ? w : Interval(0);
  }
  StripReport rep;
  rep.k = k;
  rep.n = n;
  rep.eigen_ratio = perron_root(C);
  rep.log_lambda = Interval(k - 1) * s.log_mag + log(rep.eigen_ratio);
  rep.h = rep.log_lambda / k_power(k, n);
  return rep;
}

Interval log_gk_range(const TransitionMatrix& M, int k) {
  const int d = M.size();
  Interval hi = log(Interval(d));
  long min_col = d;
  bool full_row = false;
  for (int j = 0; j < d; ++j) min_col = std::min<long>(min_col, M.storage().col(j).sum());
  for (int i = 0; i < d; ++i) full_row = full_row || M.storage().row(i).sum() == d;
  // Power mean: sum y_j^k >= d^{1-k} (sum y_j)^k and sum_j y_j >= min column sum.
  Rational lo_arg = Rational(d).pow(1 - k) * Rational(min_col).pow(k);
  Interval lo = log(Interval(lo_arg));
  // A row of ones puts a 1 in M r, so g_k >= 1.
  if (full_row) lo = numerics::max(lo, Interval(0));
  return Interval::hull(Interval(lo.lower_rational()), hi);
}

SeriesAccumulator general_series(const TransitionMatrix& M, int k, long N, CountOptions opts) {
  if (N < 0) throw std::invalid_argument("general_series: N must be nonnegative");
  const int d = M.size();
  SeriesAccumulator acc;
  acc.k = k;
  acc.terms_taken = N;
  GeneralCountState s = GeneralCountState::initial(M, k, opts);
  Interval sum(0);
  for (long i = 1; i <= N; ++i) {
    Interval g = s.ratios ? Interval(g_k(M, k, *s.ratios)) : g_k(M, k, s.ratio_enclosure);
    sum += log(g) / k_power(k, i + 1);
    if (i < N) s = general_step(s);
  }
  acc.partial = Interval(k - 1) * (log(Interval(d)) / Interval(k) + sum);
  acc.tail = log_gk_range(M, k) / k_power(k, N + 1);
  return acc;
}

}  // namespace treeshift
