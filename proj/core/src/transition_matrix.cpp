#include "slitpath/transition_matrix.hpp"

#include <stdexcept>
#include <string>

namespace slitpath::oracles {

RatMatrix RatMatrix::identity(std::size_t size) {
  RatMatrix out(size);
  for (std::size_t i = 0; i < size; ++i)
    out(i, i) = 1;
  return out;
}

BigRat RatMatrix::trace() const {
  BigRat acc;
  for (std::size_t i = 0; i < size_; ++i)
    acc += (*this)(i, i);
  return acc;
}

RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs) {
  if (lhs.size_ != rhs.size_)
    throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = lhs.size_;
  RatMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const BigRat& a = lhs(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!rhs(k, j).is_zero())
          out(i, j) += a * rhs(k, j);
    }
  return out;
}

RatMatrix TransitionMatrix::interior() const {
  const std::size_t n = static_cast<std::size_t>(m - 1);
  RatMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b(i, j) = entries(i + 1, j + 1);
  return b;
}

TransitionMatrix build_matrix(const SlitSpec& spec, const Weights& w) {
  const int m = spec.m();
  TransitionMatrix t;
  t.m = m;
  t.entries = RatMatrix(static_cast<std::size_t>(m + 2));
  auto at = [&](int r, int c) -> BigRat& { return t.entries(static_cast<std::size_t>(r), static_cast<std::size_t>(c)); };

  at(0, 0) = 1;
  at(m, m) = 1;
  at(m + 1, m + 1) = 1;
  for (int s = 1; s <= m - 1; ++s) {
    at(s, s - 1) = w.a1();
    at(s, s + 1) = w.a2();
    at(s, s + 2) = w.a3();
  }
  return t;
}

Series matrix_series(const SlitSpec& spec, const Weights& w, int order) {
  if (order < 1)
    throw std::invalid_argument("order must be at least 1 (got " + std::to_string(order) + ")");

  const TransitionMatrix t = build_matrix(spec, w);
  const auto row = static_cast<std::size_t>(spec.start());
  Series out(static_cast<std::size_t>(order + 1));
  RatMatrix power = RatMatrix::identity(t.entries.size());
  for (int n = 1; n <= order; ++n) {
    out[static_cast<std::size_t>(n)] = w.a1() * power(row, 1);
    if (n < order)
      power = power * t.entries;
  }
  return out;
}

} // namespace slitpath::oracles
