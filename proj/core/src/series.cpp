#include "slitpath/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace slitpath {

Series series_inverse(const Poly& d, std::size_t order) {
  const BigRat c0 = d.coeff(0);
  if (c0.is_zero())
    throw std::domain_error("non-invertible series");

  const auto coeffs = d.coefficients();
  const BigRat inv0 = BigRat(1) / c0;
  Series out(order + 1);
  out[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    BigRat acc;
    const std::size_t kmax = std::min(n, coeffs.size() - 1);
    for (std::size_t k = 1; k <= kmax; ++k)
      if (!coeffs[k].is_zero())
        acc += coeffs[k] * out[n - k];
    out[n] = -acc * inv0;
  }
  return out;
}

Series series_mul(const Series& a, const Series& b) {
  const std::size_t len = std::min(a.size(), b.size());
  Series out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; i + j < len; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

} // namespace slitpath
