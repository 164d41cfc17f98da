#pragma once

#include <cstddef>
#include <vector>

#include "slitpath/bigrat.hpp"
#include "slitpath/series.hpp"
#include "slitpath/weights.hpp"

namespace slitpath::oracles {

/// Dense square matrix over BigRat.
class RatMatrix {
public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t size) : size_(size), entries_(size * size) {}

  static RatMatrix identity(std::size_t size);

  std::size_t size() const { return size_; }
  BigRat& operator()(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
  const BigRat& operator()(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }

  BigRat trace() const;

  friend RatMatrix operator*(const RatMatrix& lhs, const RatMatrix& rhs);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  std::size_t size_ = 0;
  std::vector<BigRat> entries_;
};

/// One-step matrix of the absorbing walk on states 0..m+1.
///
/// Rows 0, m and m+1 are unit rows. Interior row s carries a1 at column s-1,
/// a2 at s+1 and a3 at s+2.
struct TransitionMatrix {
  int m = 0;
  RatMatrix entries;

  /// The (m-1)x(m-1) block on the interior states 1..m-1.
  RatMatrix interior() const;
};

TransitionMatrix build_matrix(const SlitSpec& spec, const Weights& w);

/// series[n] = a1 * (A^(n-1))[m-1][1] for n = 1..order, series[0] = 0.
///
/// Each A^(n-1) is formed by explicit exact matrix multiplication.
Series matrix_series(const SlitSpec& spec, const Weights& w, int order);

} // namespace slitpath::oracles
