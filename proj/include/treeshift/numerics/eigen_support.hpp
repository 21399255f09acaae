#pragma once

#include <Eigen/Core>

#include "treeshift/numerics/big.hpp"
#include "treeshift/numerics/interval.hpp"

// Lets Rational and Interval serve as Eigen scalars. Only the expression
// templates for sums and products are used; no decompositions.
namespace Eigen {

template <>
struct NumTraits<treeshift::numerics::Rational> : GenericNumTraits<treeshift::numerics::Rational> {
  using Real = treeshift::numerics::Rational;
  using NonInteger = treeshift::numerics::Rational;
  using Nested = treeshift::numerics::Rational;
  using Literal = treeshift::numerics::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<treeshift::numerics::Interval> : GenericNumTraits<treeshift::numerics::Interval> {
  using Real = treeshift::numerics::Interval;
  using NonInteger = treeshift::numerics::Interval;
  using Nested = treeshift::numerics::Interval;
  using Literal = treeshift::numerics::Interval;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace treeshift {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Rational = numerics::Rational;
using Interval = numerics::Interval;

/// Entry-wise conversion of an exact vector to degenerate intervals.
inline Vector<Interval> to_interval(const Vector<Rational>& v) {
  Vector<Interval> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Interval(v(i));
  return out;
}

}  // namespace treeshift
