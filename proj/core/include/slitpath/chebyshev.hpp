#pragma once

#include <complex>
#include <vector>

#include <gmpxx.h>

namespace slitpath {

/// Coefficient table of V_k(y) = Σ_j t[j] y^(k-2j), the Chebyshev-like
/// polynomials with V_0 = 1, V_1 = y, V_{k+1} = 2y V_k + V_{k-1}.
///
/// These satisfy T_k(i y) = i^k V_k(y) for the ordinary Chebyshev T_k, which
/// is how cos(k arccos(i y)) becomes a real polynomial in y.
struct ChebV {
  unsigned order = 0;
  /// t[j] for j = 0..order/2; all strictly positive.
  std::vector<mpz_class> coefficients;

  std::complex<double> evaluate(std::complex<double> y) const;
};

/// Memoized for the process lifetime; safe to call concurrently. The returned
/// reference stays valid.
const ChebV& cheb_v(unsigned k);

} // namespace slitpath
