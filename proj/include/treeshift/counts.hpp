#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "treeshift/numerics/big.hpp"
#include "treeshift/numerics/eigen_support.hpp"
#include "treeshift/numerics/interval.hpp"
#include "treeshift/transition_matrix.hpp"

namespace treeshift {

using numerics::BigNat;

struct CountOptions {
  /// Exact big-integer arithmetic stops once a count exceeds this many
  /// decimal digits; deeper levels continue in log space with intervals.
  std::size_t exact_digit_cap = 1'000'000;
};

/// Labelling counts of the depth-n subtree for the golden mean shift (no two
/// adjacent 1s) on the k-ary tree: b0 with root label 0, b1 with root label 1.
struct GoldenCountState {
  int k = 2;
  long n = -1;
  BigNat b0{1};
  BigNat b1{0};

  /// Level -1: (1, 0), the empty-tree convention.
  static GoldenCountState initial(int k);
  BigNat total() const { return b0 + b1; }
};

/// (b0, b1) -> ((b0 + b1)^k, b0^k) at level n + 1.
GoldenCountState gm_step(const GoldenCountState& s);
/// b0 / (b0 + b1).
Rational gm_ratio(const GoldenCountState& s);
/// State at level n >= -1 by iterating gm_step.
GoldenCountState gm_state(int k, long n);

/// |Delta_n| = 1 + k + ... + k^n.
BigNat delta_size(int k, long n);
Interval delta_size_interval(int k, long n);

/// log(total count) / |Delta_n|, an upper bound for the entropy because the
/// normalised log-counts decrease to their infimum.
Interval entropy_upper_bound(const GoldenCountState& s);

/// One level of the golden recursion with both regimes folded together.
/// `exact` is present while the counts are within the digit cap; the ratio
/// and log-count enclosures are always populated.
struct GoldenLevel {
  long n = -1;
  std::optional<GoldenCountState> exact;
  std::optional<Rational> ratio;
  Interval ratio_enclosure;
  Interval log_total;
};

/// Memoised walk down the golden recursion for a fixed k. Not thread safe;
/// use one chain per thread.
class GoldenChain {
 public:
  explicit GoldenChain(int k, CountOptions opts = {});
  int k() const { return k_; }
  /// Level n >= -1, extending the chain as needed.
  const GoldenLevel& level(long n);

 private:
  int k_;
  CountOptions opts_;
  std::vector<GoldenLevel> levels_;  // levels_[i] holds level i - 1
};

Interval entropy_upper_bound(int k, const GoldenLevel& lvl);

/// General d-symbol state in ratio form: x(n) = |x(n)| * ratios with
/// x_i(n+1) = ((M x(n))_i)^k and x(0) = (1, ..., 1).
struct GeneralCountState {
  TransitionMatrix M = TransitionMatrix::golden();
  int k = 2;
  long n = 0;
  /// Exact ratios while within the digit cap.
  std::optional<Vector<Rational>> ratios;
  Vector<Interval> ratio_enclosure;
  /// Enclosure of log |x(n)|.
  Interval log_mag;
  CountOptions opts;

  static GeneralCountState initial(const TransitionMatrix& M, int k, CountOptions opts = {});
};

/// g_k(r) = sum_j ((M r)_j)^k.
Rational g_k(const TransitionMatrix& M, int k, const Vector<Rational>& r);
Interval g_k(const TransitionMatrix& M, int k, const Vector<Interval>& r);

/// Ratio map T_k(r)_i = ((M r)_i)^k / g_k(r) and log|x| += log g_k.
GeneralCountState general_step(const GeneralCountState& s);
GeneralCountState general_state(const TransitionMatrix& M, int k, long n, CountOptions opts = {});

Interval entropy_upper_bound(const GeneralCountState& s);

/// Exact counts x_i(n) by root label for a general M (n >= 0); sizes grow
/// like k^n digits, so keep n small.
std::vector<BigNat> general_counts(const TransitionMatrix& M, int k, long n);
BigNat general_total(const TransitionMatrix& M, int k, long n);

}  // namespace treeshift
