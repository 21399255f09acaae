#pragma once

#include <optional>

#include "treeshift/numerics/polynomial.hpp"

namespace treeshift {

using numerics::Polynomial;
using numerics::Rational;

/// Published coefficient listings of the monotonicity polynomials for
/// k = 2..8. Each listing equals scale * (unnormalised polynomial); only
/// k = 3 has scales other than 1 (the whole of n_3 is printed doubled, so
/// A and rad_coeff carry 2 and d carries 4). The q listing is always the
/// unnormalised d / p^2.
struct PublishedPolynomials {
  int k = 0;
  Polynomial A;
  Polynomial rad_coeff;
  Polynomial d;
  Polynomial q;
  Rational rad_scale{1};
  Rational d_scale{1};
};

std::optional<PublishedPolynomials> published_polynomials(int k);

}  // namespace treeshift
