#include "slitpath/genfun.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slitpath/binomial.hpp"
#include "slitpath/chebyshev.hpp"

namespace slitpath {

int min_terms(int m) {
  if (m < 2)
    throw std::invalid_argument("m must be at least 2 (got " + std::to_string(m) + ")");
  return 2 * (m - 1) / 3;
}

Poly g_term(int n, const SlitSpec& spec, const Weights& w) {
  const int m = spec.m();
  if (n < 1 || n > m - 1)
    throw std::out_of_range("term index out of range");

  const long top = m - 1 - n;
  const BigRat a1n = w.a1().pow(static_cast<unsigned>(n));
  const BigRat half_a2 = w.a2() / BigRat(2);
  std::vector<BigRat> c(static_cast<std::size_t>(2 * n + 1));

  // cos(nπ/2) C(M, n/2)^2 vanishes for odd n.
  if (n % 2 == 0) {
    const BigRat b = binom(top, static_cast<unsigned long>(n / 2));
    BigRat head = b * b * a1n * w.a3().pow(static_cast<unsigned>(n / 2));
    if ((n / 2) % 2 == 1)
      head = -head;
    c[static_cast<std::size_t>(3 * n / 2)] += head;
  }

  for (int u = 0; u <= (n - 1) / 2; ++u) {
    BigRat outer = BigRat(2) * binom(top, static_cast<unsigned long>(u)) *
                   binom(top, static_cast<unsigned long>(n - u)) * a1n;
    if (outer.is_zero())
      continue;
    if ((n + u) % 2 == 1)
      outer = -outer;

    const int k = n - 2 * u;
    const ChebV& v = cheb_v(static_cast<unsigned>(k));
    for (int j = 0; 2 * j <= k; ++j) {
      const BigRat inner = BigRat(v.coefficients[static_cast<std::size_t>(j)]) *
                           half_a2.pow(static_cast<unsigned>(k - 2 * j)) *
                           w.a3().pow(static_cast<unsigned>(u + j));
      c[static_cast<std::size_t>(2 * n - u - j)] += outer * inner;
    }
  }
  return Poly(std::move(c));
}

Poly partial_denominator(const SlitSpec& spec, const Weights& w, int terms) {
  Poly d = Poly::constant(1);
  for (int n = 1; n <= terms; ++n)
    d += g_term(n, spec, w);
  return d;
}

Poly denominator(const SlitSpec& spec, const Weights& w) {
  Poly d = partial_denominator(spec, w, min_terms(spec.m()));
  if (d.degree() > spec.m() - 1)
    throw std::logic_error("denominator has degree " + std::to_string(d.degree()) + " above m-1 = " +
                           std::to_string(spec.m() - 1));
  return d;
}

GenFun genfun_from_denominator(const SlitSpec& spec, const Weights& w, Poly d, int order) {
  const int shift = spec.m() - 1;
  if (order < shift)
    throw std::invalid_argument("order " + std::to_string(order) + " is below m-1 = " + std::to_string(shift));

  GenFun f;
  f.numerator_shift = shift;
  f.numerator_scale = w.a1().pow(static_cast<unsigned>(shift));
  const Series inv = series_inverse(d, static_cast<std::size_t>(order - shift));
  f.denominator = std::move(d);
  f.series.assign(static_cast<std::size_t>(order + 1), BigRat{});
  for (std::size_t i = 0; i < inv.size(); ++i)
    f.series[i + static_cast<std::size_t>(shift)] = f.numerator_scale * inv[i];
  return f;
}

GenFun genfun(const SlitSpec& spec, const Weights& w, int order) {
  if (order < spec.m() - 1)
    throw std::invalid_argument("order " + std::to_string(order) + " is below m-1 = " + std::to_string(spec.m() - 1));
  return genfun_from_denominator(spec, w, denominator(spec, w), order);
}

Poly a2_zero_denominator(const SlitSpec& spec, const Weights& w) {
  if (!w.a2().is_zero())
    throw std::invalid_argument("special case requires a2 = 0");

  const int m = spec.m();
  const BigRat base = w.a1() * w.a1() * w.a3();
  Poly d = Poly::constant(1);
  for (int n = 1; 3 * n < m; ++n) {
    const BigRat c = base.pow(static_cast<unsigned>(n)) * binom(3 * n - m, static_cast<unsigned long>(n));
    d += Poly::monomial(c, static_cast<std::size_t>(3 * n));
  }
  return d;
}

GenFun genfun_a2_zero(const SlitSpec& spec, const Weights& w, int order) {
  Poly d = a2_zero_denominator(spec, w);
  return genfun_from_denominator(spec, w, std::move(d), order);
}

} // namespace slitpath
