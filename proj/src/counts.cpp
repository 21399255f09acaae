#include "treeshift/counts.hpp"

#include <stdexcept>

namespace treeshift {

namespace {

void require_arity(int k) {
  if (k < 2) throw std::invalid_argument("tree arity k must be at least 2");
}

// Bits corresponding to the decimal digit cap (log2 10 ~ 3.3219).
std::size_t cap_bits(const CountOptions& opts) {
  return static_cast<std::size_t>(static_cast<double>(opts.exact_digit_cap) * 3.3219280948873626) + 1;
}

Interval unit_interval() { return Interval(Rational(0), Rational(1)); }

}  // namespace

GoldenCountState GoldenCountState::initial(int k) {
  require_arity(k);
  GoldenCountState s;
  s.k = k;
  return s;
}

GoldenCountState gm_step(const GoldenCountState& s) {
  GoldenCountState next;
  next.k = s.k;
  next.n = s.n + 1;
  next.b0 = s.total().pow(static_cast<unsigned long>(s.k));
  next.b1 = s.b0.pow(static_cast<unsigned long>(s.k));
  return next;
}

Rational gm_ratio(const GoldenCountState& s) {
  BigNat t = s.total();
  if (t.is_zero()) throw std::domain_error("gm_ratio: empty count");
  return Rational(s.b0, t);
}

GoldenCountState gm_state(int k, long n) {
  if (n < -1) throw std::invalid_argument("level must be at least -1");
  GoldenCountState s = GoldenCountState::initial(k);
  while (s.n < n) s = gm_step(s);
  return s;
}

BigNat delta_size(int k, long n) {
  require_arity(k);
  if (n < 0) throw std::invalid_argument("delta_size: level must be nonnegative");
  BigNat size(0);
  BigNat term(1);
  for (long i = 0; i <= n; ++i) {
    size += term;
    term *= BigNat(static_cast<std::uint64_t>(k));
  }
  return size;
}

Interval delta_size_interval(int k, long n) { return Interval(delta_size(k, n)); }

Interval entropy_upper_bound(const GoldenCountState& s) {
  if (s.n < 0) throw std::invalid_argument("entropy_upper_bound: level must be nonnegative");
  return numerics::log(s.total()) / delta_size_interval(s.k, s.n);
}

GoldenChain::GoldenChain(int k, CountOptions opts) : k_(k), opts_(opts) {
  require_arity(k);
  GoldenLevel first;
  first.n = -1;
  first.exact = GoldenCountState::initial(k);
  first.ratio = Rational(1);
  first.ratio_enclosure = Interval(1);
  first.log_total = Interval(0);
  levels_.push_back(std::move(first));
}

const GoldenLevel& GoldenChain::level(long n) {
  if (n < -1) throw std::invalid_argument("level must be at least -1");
  const std::size_t limit = cap_bits(opts_);
  while (levels_.back().n < n) {
    const GoldenLevel& prev = levels_.back();
    GoldenLevel next;
    next.n = prev.n + 1;
    if (prev.exact && prev.exact->total().bit_length() <= limit) {
      GoldenCountState s = gm_step(*prev.exact);
      Rational r = gm_ratio(s);
      next.ratio_enclosure = Interval(r);
      next.log_total = numerics::log(s.total());
      next.ratio = std::move(r);
      next.exact = std::move(s);
    } else {
      // B_{n+1} = B_n^k (1 + r_n^k) and r_{n+1} = 1 / (1 + r_n^k).
      Interval one_plus = Interval(1) + numerics::pow(prev.ratio_enclosure, static_cast<unsigned long>(k_));
      next.ratio_enclosure = numerics::intersect(Interval(1) / one_plus, unit_interval());
      next.log_total = Interval(k_) * prev.log_total + numerics::log(one_plus);
    }
    levels_.push_back(std::move(next));
  }
  return levels_[static_cast<std::size_t>(n + 1)];
}

Interval entropy_upper_bound(int k, const GoldenLevel& lvl) {
  if (lvl.n < 0) throw std::invalid_argument("entropy_upper_bound: level must be nonnegative");
  return lvl.log_total / delta_size_interval(k, lvl.n);
}

GeneralCountState GeneralCountState::initial(const TransitionMatrix& M, int k, CountOptions opts) {
  require_arity(k);
  GeneralCountState s;
  s.M = M;
  s.k = k;
  s.n = 0;
  s.opts = opts;
  const int d = M.size();
  Vector<Rational> r = Vector<Rational>::Constant(d, Rational(1, d));
  s.ratio_enclosure = to_interval(r);
  s.ratios = std::move(r);
  s.log_mag = numerics::log(Interval(d));
  return s;
}

Rational g_k(const TransitionMatrix& M, int k, const Vector<Rational>& r) {
  Vector<Rational> y = M.storage().cast<Rational>() * r;
  Rational g(0);
  for (Eigen::Index i = 0; i < y.size(); ++i) g += y(i).pow(k);
  return g;
}

Interval g_k(const TransitionMatrix& M, int k, const Vector<Interval>& r) {
  Vector<Interval> y = M.storage().cast<Interval>() * r;
  Interval g(0);
  for (Eigen::Index i = 0; i < y.size(); ++i) g += numerics::pow(y(i), static_cast<unsigned long>(k));
  return g;
}

GeneralCountState general_step(const GeneralCountState& s) {
  GeneralCountState next = s;
  next.n = s.n + 1;
  const int d = s.M.size();
  bool exact = false;
  if (s.ratios) {
    std::size_t bits = 0;
    for (Eigen::Index i = 0; i < d; ++i) bits = std::max(bits, s.ratios->coeff(i).height_bits());
    exact = bits <= cap_bits(s.opts);
  }
  if (exact) {
    const Vector<Rational>& r = *s.ratios;
    Vector<Rational> y = s.M.storage().cast<Rational>() * r;
    Rational g(0);
    for (Eigen::Index i = 0; i < d; ++i) {
      y(i) = y(i).pow(s.k);
      g += y(i);
    }
    if (g.is_zero()) throw std::domain_error("general_step: image vector vanished");
    for (Eigen::Index i = 0; i < d; ++i) y(i) /= g;
    next.log_mag = Interval(s.k) * s.log_mag + numerics::log(Interval(g));
    next.ratio_enclosure = to_interval(y);
    next.ratios = std::move(y);
  } else {
    Vector<Interval> y = s.M.storage().cast<Interval>() * s.ratio_enclosure;
    Interval g(0);
    for (Eigen::Index i = 0; i < d; ++i) {
      y(i) = numerics::pow(y(i), static_cast<unsigned long>(s.k));
      g += y(i);
    }
    for (Eigen::Index i = 0; i < d; ++i) y(i) = numerics::intersect(y(i) / g, unit_interval());
    next.log_mag = Interval(s.k) * s.log_mag + numerics::log(g);
    next.ratio_enclosure = std::move(y);
    next.ratios.reset();
  }
  return next;
}

GeneralCountState general_state(const TransitionMatrix& M, int k, long n, CountOptions opts) {
  if (n < 0) throw std::invalid_argument("level must be nonnegative");
  GeneralCountState s = GeneralCountState::initial(M, k, opts);
  while (s.n < n) s = general_step(s);
  return s;
}

Interval entropy_upper_bound(const GeneralCountState& s) {
  return s.log_mag / delta_size_interval(s.k, s.n);
}

std::vector<BigNat> general_counts(const TransitionMatrix& M, int k, long n) {
  require_arity(k);
  if (n < 0) throw std::invalid_argument("level must be nonnegative");
  const int d = M.size();
  std::vector<BigNat> x(static_cast<std::size_t>(d), BigNat(1));
  for (long level = 0; level < n; ++level) {
    std::vector<BigNat> next(x.size());
    for (int i = 0; i < d; ++i) {
      BigNat s(0);
      for (int j = 0; j < d; ++j)
        if (M(i, j)) s += x[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(i)] = s.pow(static_cast<unsigned long>(k));
    }
    x = std::move(next);
  }
  return x;
}

BigNat general_total(const TransitionMatrix& M, int k, long n) {
  BigNat t(0);
  for (const auto& v : general_counts(M, k, n)) t += v;
  return t;
}

}  // namespace treeshift
