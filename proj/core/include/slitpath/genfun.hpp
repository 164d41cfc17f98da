#pragma once

#include "slitpath/bigrat.hpp"
#include "slitpath/poly.hpp"
#include "slitpath/series.hpp"
#include "slitpath/weights.hpp"

namespace slitpath {

/// Absorption generating function z^shift * scale / denominator(z), together
/// with its expansion up to a requested order.
struct GenFun {
  int numerator_shift = 0;  ///< m - 1
  BigRat numerator_scale;   ///< a1^(m-1)
  Poly denominator;         ///< constant term 1, degree <= m - 1
  Series series;            ///< series[n] = weight of paths absorbed at 0 at step n
};

/// Number of G_n terms making up the denominator: floor(2(m-1)/3).
int min_terms(int m);

/// Denominator contribution G_n(z) for 1 <= n <= m-1.
///
/// Computed in the cancelled integer-power form
///
///   G_n = [n even] (-1)^(n/2) C(M, n/2)^2 a1^n a3^(n/2) z^(3n/2)
///       + Σ_u 2 (-1)^(n+u) C(M, u) C(M, n-u) a1^n
///             Σ_j t[k][j] (a2/2)^(k-2j) a3^(u+j) z^(2n-u-j)
///
/// with M = m-1-n, u = 0..floor((n-1)/2), k = n-2u and t = cheb_v(k). Every
/// exponent lies in [ceil(3n/2), 2n].
///
/// Throws std::out_of_range("term index out of range") outside 1..m-1.
Poly g_term(int n, const SlitSpec& spec, const Weights& w);

/// 1 + G_1 + ... + G_terms with no degree check.
Poly partial_denominator(const SlitSpec& spec, const Weights& w, int terms);

/// 1 + Σ_{n=1}^{min_terms(m)} G_n.
///
/// Throws std::logic_error if any exponent exceeds m-1.
Poly denominator(const SlitSpec& spec, const Weights& w);

/// Expands z^(m-1) a1^(m-1) / d(z) through z^order for an arbitrary
/// denominator d with d(0) != 0.
GenFun genfun_from_denominator(const SlitSpec& spec, const Weights& w, Poly d, int order);

/// Throws std::invalid_argument if order < m-1.
GenFun genfun(const SlitSpec& spec, const Weights& w, int order);

/// Denominator of the a2 = 0 regime: 1 + Σ_{3n<m} (a1^2 a3)^n C(3n-m, n) z^(3n),
/// with the negative-top binomial convention.
///
/// Throws std::invalid_argument("special case requires a2 = 0") otherwise.
Poly a2_zero_denominator(const SlitSpec& spec, const Weights& w);

/// Same contract as genfun, built from a2_zero_denominator.
GenFun genfun_a2_zero(const SlitSpec& spec, const Weights& w, int order);

} // namespace slitpath
