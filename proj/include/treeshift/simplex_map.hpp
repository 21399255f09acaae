#pragma once

#include <cstddef>
#include <vector>

#include "treeshift/numerics/eigen_support.hpp"
#include "treeshift/numerics/interval.hpp"
#include "treeshift/numerics/polynomial.hpp"
#include "treeshift/transition_matrix.hpp"

namespace treeshift {

using numerics::Polynomial;

// The golden ratio map T x = 1 / (1 + x^k) on [0, 1]. The exponent is an
// interval so that non-integer k can be studied; integer k is the tree arity.

Interval apply_T(const Interval& k, const Interval& x);
Rational apply_T(int k, const Rational& x);
/// General simplex map (T_k r)_i = (M r)_i^k / sum_j (M r)_j^k.
Vector<Rational> apply_T(const TransitionMatrix& M, int k, const Vector<Rational>& r);
Vector<Interval> apply_T(const TransitionMatrix& M, int k, const Vector<Interval>& r);

/// |T'(x)| = k x^{k-1} / (1 + x^k)^2, enclosed over x.
Interval abs_T_derivative(const Interval& k, const Interval& x);

enum class Stability { Attracting, Repelling, Inconclusive };
const char* to_string(Stability s);

struct FixedPointReport {
  Interval u;
  /// T'(u) = -k u^{k+1} = -k (1 - u).
  Interval derivative;
  Stability stability = Stability::Inconclusive;
};

/// Bisection on u^{k+1} + u - 1 down to `width` (or until the sign can no
/// longer be decided, which happens first for a wide k).
FixedPointReport fixed_point(const Interval& k, double width = 1e-12);

/// g(k) = 1 + k^{k/(k+1)}, with g(0) = 2.
Interval g_critical(const Interval& k);

/// Interval of width <= tolerance containing the solution k0 in (4, 5) of
/// g(k) = k; the fixed point is attracting for k < k0.
Interval critical_k0(double tolerance);

struct Period2Report {
  Interval p1;
  Interval p2;
  /// p1 == u == p2: the orbit of 0 converges to the fixed point.
  bool merged = false;
  /// sup |(T^2)'| < 1 on the certified neighbourhood of p1.
  bool attracting = false;
  /// T^2 maps the neighbourhood into itself.
  bool certified = false;
  long iterations = 0;
};

/// Follows 0 -> T0 -> ...; even iterates increase to p1, odd ones decrease
/// to p2. The limit is then certified by a self-mapping neighbourhood J of
/// p1 with T^2(J) inside J and |(T^2)'| < 1 on J.
Period2Report period2_orbit(const Interval& k, long max_iterations = 200000);

struct InflectionVerdict {
  int k = 3;
  Polynomial j;
  bool constant_positive = false;
  bool linear_positive = false;
  bool higher_negative = false;
  /// Coefficients of y^i, i >= 2, equal (k-1) C(k,i) - (k^2+1) C(k,i-1).
  bool formula_matches = false;
  /// Sturm count of roots in (0, infinity).
  std::size_t positive_roots = 0;
  bool holds() const {
    return constant_positive && linear_positive && higher_negative && formula_matches && positive_roots == 1;
  }
};

/// j(y, k) = k^2 y (1 - (y+1)^k) - y + k + (k - y)(y+1)^k - 1 - (y+1)^k,
/// whose unique positive root gives the unique inflection of T^2.
Polynomial inflection_polynomial(int k);
InflectionVerdict inflection_certificate(int k);

std::vector<Rational> orbit_trace(int k, const Rational& start, long steps);
std::vector<Interval> orbit_trace(const Interval& k, const Interval& start, long steps);
std::vector<Vector<Rational>> orbit_trace(const TransitionMatrix& M, int k, const Vector<Rational>& start, long steps);

}  // namespace treeshift
