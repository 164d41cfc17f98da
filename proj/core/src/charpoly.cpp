#include "slitpath/charpoly.hpp"

#include <utility>

namespace slitpath::oracles {

std::vector<BigRat> faddeev_leverrier(const RatMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigRat> c(n + 1);
  c[n] = 1;
  if (n == 0)
    return c;

  // Nonzero pattern of A, row by row; the walk matrices have 3 per row.
  std::vector<std::vector<std::pair<std::size_t, BigRat>>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero())
        rows[i].emplace_back(j, a(i, j));

  // M_1 = I; c_{n-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{n-k} I.
  RatMatrix mk = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix am(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [col, v] : rows[i])
        for (std::size_t j = 0; j < n; ++j)
          if (!mk(col, j).is_zero())
            am(i, j) += v * mk(col, j);

    c[n - k] = -am.trace() / BigRat(static_cast<long>(k));
    if (k == n)
      break;
    for (std::size_t i = 0; i < n; ++i)
      am(i, i) += c[n - k];
    mk = std::move(am);
  }
  return c;
}

Poly interior_charpoly(const SlitSpec& spec, const Weights& w) {
  const std::vector<BigRat> c = faddeev_leverrier(build_matrix(spec, w).interior());
  // det(I - zB) = z^n det(z^{-1} I - B): coefficients reversed.
  return Poly(std::vector<BigRat>(c.rbegin(), c.rend()));
}

} // namespace slitpath::oracles
