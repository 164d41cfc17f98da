#pragma once

#include <vector>

#include "slitpath/bigrat.hpp"
#include "slitpath/poly.hpp"
#include "slitpath/transition_matrix.hpp"
#include "slitpath/weights.hpp"

namespace slitpath::oracles {

/// Coefficients c_0..c_n of det(λI - A) = Σ c_k λ^k, by the Faddeev–LeVerrier
/// recurrence in exact arithmetic. c_n = 1.
std::vector<BigRat> faddeev_leverrier(const RatMatrix& a);

/// det(I - zB) for the interior block B of the transition matrix.
Poly interior_charpoly(const SlitSpec& spec, const Weights& w);

} // namespace slitpath::oracles
