#pragma once

#include "slitpath/bigrat.hpp"

namespace slitpath {

/// Generalized binomial coefficient top*(top-1)*...*(top-bottom+1)/bottom!.
///
/// top may be negative (falling-factorial convention), so binom(-2, 3) = -4.
/// binom(top, 0) = 1 for every top.
BigRat binom(long top, unsigned long bottom);

} // namespace slitpath
