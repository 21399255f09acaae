#include "treeshift/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "treeshift/counts.hpp"

namespace treeshift {

namespace {

using Counts = std::vector<BigNat>;

void require_arity(int k) {
  if (k < 2) throw std::invalid_argument("tree arity k must be at least 2");
}

// k^e as a long, throwing on overflow.
long ipow(int k, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > std::numeric_limits<long>::max() / k) throw std::overflow_error("pattern size overflows");
    r *= k;
  }
  return r;
}

// (M v)_a.
Counts apply_matrix(const TransitionMatrix& M, const Counts& v) {
  const int d = M.size();
  Counts out(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    BigNat s(0);
    for (int b = 0; b < d; ++b)
      if (M(a, b)) s += v[static_cast<std::size_t>(b)];
    out[static_cast<std::size_t>(a)] = std::move(s);
  }
  return out;
}

BigNat sum(const Counts& v) {
  BigNat s(0);
  for (const auto& x : v) s += x;
  return s;
}

// Counts by root label for the prefix shapes of the breadth-first order.
// F(t): complete tree of depth t. S(m, j): rows 0..m-1 complete plus the
// first j nodes of row m.
class ShapeCounter {
 public:
  ShapeCounter(const TransitionMatrix& M, int k) : M_(M), k_(k) {
    full_.push_back(Counts(static_cast<std::size_t>(M.size()), BigNat(1)));
  }

  const Counts& full(long t) {
    while (static_cast<long>(full_.size()) <= t) {
      Counts y = apply_matrix(M_, full_.back());
      for (auto& v : y) v = v.pow(static_cast<unsigned long>(k_));
      full_.push_back(std::move(y));
    }
    return full_[static_cast<std::size_t>(t)];
  }

  Counts partial(long m, long j) {
    if (j == 0) return full(m - 1);
    const long row = ipow(k_, m);
    if (j == row) return full(m);
    const long child_row = row / k_;
    Counts out(static_cast<std::size_t>(M_.size()), BigNat(1));
    for (int c = 0; c < k_; ++c) {
      const long jc = std::clamp(j - c * child_row, 0L, child_row);
      if (m == 1 && jc == 0) continue;  // absent child
      const Counts child = m == 1 ? full(0) : partial(m - 1, jc);
      const Counts mc = apply_matrix(M_, child);
      for (std::size_t a = 0; a < out.size(); ++a) out[a] *= mc[a];
    }
    return out;
  }

 private:
  const TransitionMatrix& M_;
  int k_;
  std::vector<Counts> full_;
};

}  // namespace

Pattern Pattern::delta(int k, long n) {
  require_arity(k);
  if (n < 0) throw std::invalid_argument("Pattern::delta: depth must be nonnegative");
  long count = 0;
  for (long t = 0; t <= n; ++t) count += ipow(k, t);
  return prefix(k, count);
}

Pattern Pattern::prefix(int k, long count) {
  require_arity(k);
  if (count < 1) throw std::invalid_argument("Pattern::prefix: need at least one node");
  Pattern p;
  p.k = k;
  p.addresses.reserve(static_cast<std::size_t>(count));
  p.parent.reserve(static_cast<std::size_t>(count));
  p.addresses.emplace_back();
  p.parent.push_back(-1);
  for (long i = 1; i < count; ++i) {
    const long par = (i - 1) / k;
    const int digit = static_cast<int>((i - 1) % k);
    p.parent.push_back(static_cast<int>(par));
    p.addresses.push_back(p.addresses[static_cast<std::size_t>(par)] + static_cast<char>('0' + digit));
  }
  return p;
}

BruteCount enumerate_pattern(const TransitionMatrix& M, const Pattern& pattern, std::size_t node_cap) {
  const std::size_t n = pattern.size();
  if (n == 0) throw std::invalid_argument("enumerate_pattern: empty pattern");
  if (n > node_cap) throw std::length_error("enumerate_pattern: pattern exceeds the node cap");
  const int d = M.size();
  std::vector<int> label(n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (i == n) {
      if (count == std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("enumerate_pattern: count overflows 64 bits");
      ++count;
      return;
    }
    const int par = pattern.parent[i];
    for (int a = 0; a < d; ++a) {
      if (par >= 0 && !M(label[static_cast<std::size_t>(par)], a)) continue;
      label[i] = a;
      visit(i + 1);
    }
  };
  visit(0);
  return {pattern, BigNat(count)};
}

std::vector<BigNat> prefix_counts(const TransitionMatrix& M, long n_max, int k) {
  require_arity(k);
  if (n_max < 1) throw std::invalid_argument("prefix_counts: n_max must be positive");
  if (n_max > (1L << 20)) throw std::length_error("prefix_counts: n_max above 2^20");
  ShapeCounter shapes(M, k);
  std::vector<BigNat> q;
  q.reserve(static_cast<std::size_t>(n_max));
  long m = 0;          // rows 0..m-1 complete
  long complete = 0;   // nodes in those rows
  long row = 1;        // k^m
  for (long n = 1; n <= n_max; ++n) {
    if (n - complete > row) {
      complete += row;
      row *= k;
      ++m;
    }
    const long j = n - complete;
    q.push_back(m == 0 ? sum(shapes.full(0)) : sum(shapes.partial(m, j)));
  }
  return q;
}

std::vector<BigNat> prefix_counts_naive(const TransitionMatrix& M, long n_max, int k, std::size_t node_cap) {
  require_arity(k);
  if (n_max < 1) throw std::invalid_argument("prefix_counts_naive: n_max must be positive");
  std::vector<BigNat> q;
  for (long n = 1; n <= n_max; ++n) q.push_back(enumerate_pattern(M, Pattern::prefix(k, n), node_cap).count);
  return q;
}

long binary_delta_size(long n) {
  if (n < -1 || n > 61) throw std::out_of_range("binary_delta_size: depth out of range");
  return (1L << (n + 1)) - 1;
}

std::vector<IntermediateRow> intermediate_estimates(const TransitionMatrix& M, long n_max) {
  const std::vector<BigNat> q = prefix_counts(M, n_max);
  std::vector<IntermediateRow> rows(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    rows[i].n = static_cast<long>(i) + 1;
    rows[i].q = q[i];
    rows[i].rate = numerics::log(q[i]) / Interval(rows[i].n);
  }
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = rows.size(); i-- > 0;) {
    hi = std::max(hi, rows[i].rate.upper());
    lo = std::min(lo, rows[i].rate.lower());
    rows[i].tail_max = hi;
    rows[i].tail_min = lo;
  }
  return rows;
}

BigNat split_bound(const TransitionMatrix& M, long n, long j, const std::vector<BigNat>& q) {
  if (n < 0) throw std::invalid_argument("split_bound: n must be nonnegative");
  const long last_row = 1L << (n + 1);
  if (j < 0 || j > last_row) throw std::invalid_argument("split_bound: j out of range");
  auto qc = [&](long t) -> BigNat {
    if (t < 0) return BigNat(1);
    const long c = binary_delta_size(t);
    if (c > static_cast<long>(q.size())) throw std::out_of_range("split_bound: q table too short");
    return q[static_cast<std::size_t>(c - 1)];
  };
  const BigNat d(static_cast<std::uint64_t>(M.size()));
  BigNat bound(1);
  long rest = j;
  for (long s = 0;; ++s) {
    const long full = 1L << (n + 1 - s);
    if (rest == 0) return bound * qc(n - s);
    if (rest == full) return bound * qc(n + 1 - s);
    bound *= d;
    const long half = full / 2;
    if (rest > half) {
      bound *= qc(n - s);  // complete left subtree reaching row n + 1
      rest -= half;
    } else {
      bound *= qc(n - s - 1);  // right subtree stops at row n
    }
  }
}

bool HalfRowVerdict::holds() const {
  return halfrow_holds && std::all_of(splits.begin(), splits.end(), [](const SplitCheck& s) { return s.holds; });
}

HalfRowVerdict halfrow_bound_check(const TransitionMatrix& M, long n) {
  if (n < 1 || n > 16) throw std::out_of_range("halfrow_bound_check: n must be in [1, 16]");
  const long cn = binary_delta_size(n);
  const std::vector<BigNat> q = prefix_counts(M, binary_delta_size(n + 1));
  auto at = [&](long idx) { return q[static_cast<std::size_t>(idx - 1)]; };
  HalfRowVerdict v;
  v.n = n;
  v.lhs = at(cn + (1L << n));
  v.rhs = BigNat(static_cast<std::uint64_t>(M.size())) * at(cn) * at(binary_delta_size(n - 1));
  v.halfrow_holds = v.lhs <= v.rhs;
  for (long j = 1; j < (1L << (n + 1)); ++j) {
    SplitCheck s;
    s.j = j;
    s.lhs = at(cn + j);
    s.rhs = split_bound(M, n, j, q);
    s.holds = s.lhs <= s.rhs;
    v.splits.push_back(std::move(s));
  }
  return v;
}

DisjointVerdict disjoint_decomposition_check(const TransitionMatrix& M, int k, long n, long j,
                                             std::size_t exact_digit_cap) {
  require_arity(k);
  if (n < 0 || j < 1) throw std::invalid_argument("disjoint_decomposition_check: need n >= 0 and j >= 1");
  DisjointVerdict v;
  v.k = k;
  v.n = n;
  v.j = j;
  const long depth = j * (n + 1) - 1;
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j * (n + 1)));
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n + 1));
  num -= 1;
  den -= 1;
  v.exponent = BigNat(mpz_class(num / den));

  // Both sides have about |Delta_depth| log10(d) digits.
  const double digits = (std::pow(static_cast<double>(k), static_cast<double>(depth + 1)) - 1) /
                        (k - 1) * std::log10(static_cast<double>(M.size()));
  const BigNat pn = general_total(M, k, n);
  if (digits <= static_cast<double>(exact_digit_cap) && v.exponent.fits_u64()) {
    v.exact = true;
    v.lhs_exact = general_total(M, k, depth);
    v.rhs_exact = pn.pow(static_cast<unsigned long>(v.exponent.to_u64()));
    v.lhs_log = numerics::log(v.lhs_exact);
    v.rhs_log = numerics::log(v.rhs_exact);
    v.holds = v.lhs_exact <= v.rhs_exact;
  } else {
    v.lhs_log = general_state(M, k, depth).log_mag;
    v.rhs_log = Interval(v.exponent) * numerics::log(pn);
    v.holds = mpfr_lessequal_p(v.lhs_log.hi(), v.rhs_log.lo()) != 0;
  }
  return v;
}

TransitionMatrix random_irreducible(int d, std::uint64_t seed) {
  if (d < 2 || d > 64) throw std::invalid_argument("random_irreducible: d must be in [2, 64]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  TransitionMatrix::Storage m(d, d);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (int i = 0; i < d; ++i)
      for (int c = 0; c < d; ++c) m(i, c) = coin(rng) ? 1 : 0;
    if (TransitionMatrix::irreducible(m)) return TransitionMatrix(m);
  }
  throw std::runtime_error("random_irreducible: no irreducible sample found");
}

}  // namespace treeshift
