#pragma once

#include <optional>

#include "treeshift/counts.hpp"
#include "treeshift/numerics/interval.hpp"
#include "treeshift/transition_matrix.hpp"

namespace treeshift {

/// Strip approximation h_n = log lambda_{n-1} / k^n. lambda itself has about
/// k^n digits, so only its logarithm is stored.
struct StripReport {
  int k = 2;
  long n = 1;
  Interval log_lambda;
  /// Perron root of the normalised strip matrix (c_{n-1} in the golden case).
  Interval eigen_ratio;
  Interval h;
};

struct LambdaEnclosure {
  Interval log_lambda;
  Interval eigen_ratio;
};

/// c = (1 + sqrt(1 + 4 r^{k-1})) / 2 and log lambda = (k-1) log B + log c,
/// where r = B(0)/B at the level the strip sits on.
LambdaEnclosure golden_lambda(int k, const Interval& r, const Interval& log_b);
Interval eigen_ratio(int k, const Interval& r);

/// Golden mean strip value h_n for n >= 1. The chain overload reuses counts.
StripReport strip_h(int k, long n);
StripReport strip_h(GoldenChain& chain, long n);

/// Entropy of the one-dimensional golden mean shift, log of the golden ratio.
/// It is the n = 0 strip value for any arity.
Interval h1_entropy();

/// Truncated series for h^(k) plus the enclosure of the omitted tail.
struct SeriesAccumulator {
  int k = 2;
  long terms_taken = 0;
  Interval partial;
  /// Range of the omitted tail; [0, log 2 / k^{N+1}] for the golden mean.
  Interval tail;
  /// [partial.lo + tail.lo, partial.hi + tail.hi], encloses h^(k).
  Interval enclosure() const;
};

/// Runs the ratios in exact arithmetic only while they fit the working precision.
SeriesAccumulator series_partial(int k, long N);
SeriesAccumulator series_partial(GoldenChain& chain, long N);

/// Closed-form bounds L(k) < h^(k) < U(k). Both algebraic forms are evaluated
/// and required to overlap.
struct BoundsPair {
  int k = 2;
  Interval L;
  Interval U;
  Interval L_closed;
  Interval U_closed;
};

BoundsPair bounds_LU(int k);

struct DimIncreaseVerdict {
  int k = 6;
  /// 2^{(k-1)/k + ((k-1)/k)^3}
  Interval lhs;
  /// 1 + x_{k-1}^{k-1}, x_j = 1 + 2^{-j}
  Interval rhs;
  bool inequality_holds = false;
  /// Direct comparison L(k) > U(k-1).
  Interval L_k;
  Interval U_prev;
  bool bounds_separated = false;
  bool holds() const { return inequality_holds && bounds_separated; }
};

/// Requires k >= 6.
DimIncreaseVerdict dim_increase_check(int k);

struct CrossDimVerdict {
  int k = 1;
  long m = 0;
  long n = 0;
  /// log B_m^(k) / |Delta_m|; log of the golden ratio when k = 1.
  Interval upper;
  /// Strip value h_n^(k+1), a lower bound for h^(k+1) once monotonicity in n
  /// is certified.
  Interval lower;
  bool monotone_certified = false;
  bool holds() const { return monotone_certified && upper.certainly_less(lower); }
};

/// Checks h^(k) < h^(k+1) via an upper bound at depth m and the strip at n.
CrossDimVerdict cross_dim_chain(int k, long m, long n);

/// Strip value for an arbitrary irreducible M: builds the ratio-form matrix
/// C_ij = M_ij (M_i . r)^{k-1} at level n-1 and encloses its Perron root.
StripReport general_strip_h(const TransitionMatrix& M, int k, long n, CountOptions opts = {});

/// Perron root enclosure of a nonnegative irreducible matrix with interval
/// entries. Quadratic formula for d = 2, Collatz-Wielandt quotients of an
/// approximate eigenvector otherwise. Throws std::runtime_error if the
/// enclosure cannot be made positive.
Interval perron_root(const Matrix<Interval>& C);

SeriesAccumulator general_series(const TransitionMatrix& M, int k, long N, CountOptions opts = {});

/// [G_lo, G_hi] with G_lo <= log g_k(r) <= G_hi on the whole simplex.
Interval log_gk_range(const TransitionMatrix& M, int k);

}  // namespace treeshift
