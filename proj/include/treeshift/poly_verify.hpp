#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "treeshift/numerics/interval.hpp"
#include "treeshift/numerics/polynomial.hpp"
#include "treeshift/numerics/sturm.hpp"

namespace treeshift {

using numerics::Interval;
using numerics::Polynomial;
using numerics::Rational;

/// A(r) + rad_coeff(r) * sqrt(radicand(r)) with radicand = 1 + 4 r^{k-1}.
struct RadicalExpr {
  Polynomial rad_free;
  Polynomial rad_coeff;
  Polynomial radicand;

  /// Interval value at a point of [0, 1].
  Interval evaluate(const Interval& r) const;
};

/// p_k(r) = r^{k+1} + r - 1; its root in (0, 1) is the fixed point of T.
Polynomial p_k(int k);
/// 1 + 4 r^{k-1}.
Polynomial radicand_k(int k);

/// n_k = c^{2k} - (1 + r^k)^{k-1} (c^k + 1), c = (1 + sqrt(radicand)) / 2,
/// expanded with sqrt(radicand)^2 reduced to the radicand.
RadicalExpr build_nk(int k);

/// A^2 - rad_coeff^2 * radicand.
Polynomial conjugate_square(const RadicalExpr& e);

struct SignSplit {
  bool rad_free_negative = false;   // A < 0 on [0, 1]
  std::size_t rad_free_roots = 0;   // roots of A in (0, 1]
  /// rad_coeff >= 0 on all of [0, 1]. Holds for k = 2, 3 only; for k >= 4
  /// rad_coeff turns negative near r = 1.
  bool rad_coeff_nonneg = false;
  /// Sign changes of rad_coeff / r^m in (0, 1).
  std::size_t rad_coeff_sign_changes = 0;
  std::size_t rad_coeff_valuation = 0;
  /// A < 0 is all the sign argument needs: where rad_coeff <= 0 the sum is
  /// negative outright, and where rad_coeff > 0 it is negative exactly when
  /// A^2 > rad_coeff^2 * radicand, i.e. when d > 0.
  bool ok() const { return rad_free_negative; }
};

/// Sign information for A and rad_coeff on [0, 1] via Sturm counts.
SignSplit sign_split_check(const RadicalExpr& e);

struct MonotonicityCertificate {
  int k = 0;
  RadicalExpr nk;
  Polynomial d;
  Polynomial p;
  /// d / p^2; positive on [0, 1] iff the strip values increase.
  Polynomial q;
  Polynomial remainder;
  bool remainder_zero = false;
  SignSplit sign_split;
  std::size_t roots_in_01 = 0;
  bool sturm_endpoint_adjusted = false;
  Rational value_at_0;
  Rational value_at_1;
  /// p_k has no rational root (rational root test), so p_k(r_n) != 0 at
  /// every rational ratio r_n of the recursion.
  bool p_has_no_rational_root = false;
  /// Levels n for which p_k(r_n) != 0 was also checked directly.
  long levels_checked = 0;
  bool levels_ok = false;
  /// Present when published listings exist for k; compares under the
  /// printed normalisations.
  std::optional<bool> matches_published;

  bool valid() const {
    return remainder_zero && sign_split.ok() && roots_in_01 == 0 && value_at_0.sign() > 0 &&
           p_has_no_rational_root && levels_ok;
  }
};

struct CertifyOptions {
  /// Direct p_k(r_n) checks stop once r_n's denominator exceeds this many
  /// decimal digits.
  std::size_t level_digit_cap = 20'000;
};

MonotonicityCertificate certify_monotone(int k, CertifyOptions opts = {});

/// Cached certify_monotone(k).valid(); safe to call from several threads.
bool monotone_certified(int k);

/// Rational roots of an integer-coefficient polynomial by the rational
/// root test.
std::vector<Rational> rational_roots(const Polynomial& p);

struct EquivalenceVerdict {
  int k = 0;
  Interval root;          // root of p_k in (0, 1)
  Interval fixed_residual;    // T r - r
  Interval cr_residual;       // c(r) r - 1
  Interval c_residual;        // c^{k+1} - c^k - 1
  Interval eqb_residual;      // c^{2k} - c^k (1 + r^k)^{k-1} - (1 + r^k)^{k-1}
  bool holds = false;
};

/// Isolates the root of p_k to width below 1e-15 and checks that all four
/// equivalent conditions vanish there.
EquivalenceVerdict equivalences_check(int k);

struct EndpointVerdict {
  int k = 0;
  /// c(T r) - (T r)^{k-1} c(r)^k at r = 0 and r = 1 (k >= 2 only).
  std::optional<Interval> at_0;
  std::optional<Interval> at_1;
  /// (gamma^j + 1)/2 - ((gamma + 1)/2)^j for j = 2..max(k, 2).
  std::vector<Interval> gamma_gaps;
  bool holds = false;
};

EndpointVerdict endpoint_checks(int k);

struct AsymptoteRow {
  Rational r;
  Rational q;
  Rational series;  // 1 / (1 - r)^2
};

std::vector<AsymptoteRow> qk_asymptote_probe(int k, const std::vector<Rational>& samples);

}  // namespace treeshift
