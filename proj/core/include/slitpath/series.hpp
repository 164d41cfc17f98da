#pragma once

#include <cstddef>
#include <vector>

#include "slitpath/bigrat.hpp"
#include "slitpath/poly.hpp"

namespace slitpath {

/// Truncated power series; element n is the coefficient of z^n.
using Series = std::vector<BigRat>;

/// First order+1 coefficients of 1/d(z).
///
/// Throws std::domain_error("non-invertible series") if d(0) = 0.
Series series_inverse(const Poly& d, std::size_t order);

/// Cauchy product of two series, truncated to the shorter length.
Series series_mul(const Series& a, const Series& b);

} // namespace slitpath
