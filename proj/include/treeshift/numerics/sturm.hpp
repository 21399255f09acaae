#pragma once

#include <cstddef>
#include <vector>

#include "treeshift/numerics/polynomial.hpp"

namespace treeshift::numerics {

/// Sturm sequence p, p', -rem(p, p'), ... Each remainder is replaced by its
/// primitive part; positive scaling leaves sign variations unchanged and keeps
/// coefficient growth in check.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);

  const std::vector<Polynomial>& sequence() const { return seq_; }
  /// Sign changes along the chain at x, zeros skipped.
  std::size_t variations(const Rational& x) const;

 private:
  std::vector<Polynomial> seq_;
};

struct SturmCount {
  std::size_t count = 0;
  /// A root sat exactly on an endpoint and was divided out before counting.
  bool lo_was_root = false;
  bool hi_was_root = false;
};

/// Number of distinct real roots of p in (lo, hi].
///
/// Works on the squarefree part. A root exactly at lo or hi is removed by
/// exact division by (r - endpoint) (and counted when it is hi), so the
/// chain is only ever evaluated at non-roots. Throws std::domain_error for
/// the zero polynomial or lo >= hi.
SturmCount sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Cauchy bound: every real root of p has |x| < 1 + max |a_i / a_n|.
Rational cauchy_root_bound(const Polynomial& p);

}  // namespace treeshift::numerics
