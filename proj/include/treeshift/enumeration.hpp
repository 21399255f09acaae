#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "treeshift/numerics/big.hpp"
#include "treeshift/numerics/interval.hpp"
#include "treeshift/transition_matrix.hpp"

namespace treeshift {

using numerics::BigNat;
using numerics::Interval;

/// Finite set of tree nodes in breadth-first, left-to-right order. Node 0 is
/// the root; parent[i] < i for every other node.
struct Pattern {
  int k = 2;
  std::vector<std::string> addresses;  // words over {0..k-1}
  std::vector<int> parent;             // -1 for the root

  std::size_t size() const { return parent.size(); }
  /// Delta_n: every word of length <= n.
  static Pattern delta(int k, long n);
  /// The first `count` nodes eta(1..count) of the breadth-first order.
  static Pattern prefix(int k, long count);
};

struct BruteCount {
  Pattern pattern;
  BigNat count;
};

/// Exhaustive depth-first count of labellings with M(label(parent),
/// label(child)) = 1 on every edge. Throws std::length_error above the cap.
BruteCount enumerate_pattern(const TransitionMatrix& M, const Pattern& pattern, std::size_t node_cap = 25);

/// q(1..n_max): labellings of eta(1..n) for n = 1..n_max, by a recursion on
/// the shape of the prefix (complete subtrees plus one partial spine).
std::vector<BigNat> prefix_counts(const TransitionMatrix& M, long n_max, int k = 2);

/// q(1..n_max) by brute force; only for small n_max (node cap applies).
std::vector<BigNat> prefix_counts_naive(const TransitionMatrix& M, long n_max, int k = 2,
                                        std::size_t node_cap = 25);

/// c_n = |Delta_n| on the binary tree, 2^{n+1} - 1.
long binary_delta_size(long n);

struct IntermediateRow {
  long n = 0;
  BigNat q;
  Interval rate;      // log q(n) / n
  double tail_max = 0;  // max over m in [n, n_max] of log q(m) / m
  double tail_min = 0;  // min over the same range
};

std::vector<IntermediateRow> intermediate_estimates(const TransitionMatrix& M, long n_max);

struct SplitCheck {
  long j = 0;
  BigNat lhs;  // q(c_n + j)
  BigNat rhs;  // decomposition bound
  bool holds = false;
};

struct HalfRowVerdict {
  long n = 0;
  BigNat lhs;  // q(c_n + 2^n)
  BigNat rhs;  // d q(c_n) q(c_{n-1})
  bool halfrow_holds = false;
  /// q(c_n + j) against the spine decomposition bound for 1 <= j < 2^{n+1}.
  std::vector<SplitCheck> splits;
  bool holds() const;
};

/// Bound for q(c_n + j) from cutting Delta_n(j) along the path to the last
/// labelled node: d per path node times q(c_t) for every complete subtree
/// hanging off the path.
BigNat split_bound(const TransitionMatrix& M, long n, long j, const std::vector<BigNat>& q);

HalfRowVerdict halfrow_bound_check(const TransitionMatrix& M, long n);

struct DisjointVerdict {
  int k = 2;
  long n = 0;
  long j = 0;
  /// Exponent (k^{j(n+1)} - 1) / (k^{n+1} - 1).
  BigNat exponent;
  bool exact = false;
  BigNat lhs_exact;  // p(j(n+1) - 1)
  BigNat rhs_exact;  // p(n)^exponent
  Interval lhs_log;
  Interval rhs_log;
  bool holds = false;
};

/// p(j(n+1) - 1) <= p(n)^{(k^{j(n+1)} - 1)/(k^{n+1} - 1)}, from disjoint
/// copies of Delta_n inside Delta_{j(n+1)-1}.
DisjointVerdict disjoint_decomposition_check(const TransitionMatrix& M, int k, long n, long j,
                                             std::size_t exact_digit_cap = 100'000);

/// Deterministic random irreducible d x d 0/1 matrix.
TransitionMatrix random_irreducible(int d, std::uint64_t seed);

}  // namespace treeshift
