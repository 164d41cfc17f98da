#pragma once

#include <string>
#include <string_view>

#include "slitpath/bigrat.hpp"

namespace slitpath {

/// Step weights of the walk: a1 for a -1 step, a2 for +1, a3 for +2.
/// Requires a1 > 0, a3 > 0, a2 >= 0; a2 = 0 is the no-(+1)-step regime.
class Weights {
public:
  /// Throws std::invalid_argument if the constraints above are violated.
  Weights(BigRat a1, BigRat a2, BigRat a3);

  /// Parses "a1,a2,a3" where each entry is an integer or "p/q".
  static Weights parse(std::string_view text);

  const BigRat& a1() const { return a1_; }
  const BigRat& a2() const { return a2_; }
  const BigRat& a3() const { return a3_; }

  /// "a1,a2,a3" in canonical rational text.
  std::string str() const;

  friend bool operator==(const Weights&, const Weights&) = default;

private:
  BigRat a1_;
  BigRat a2_;
  BigRat a3_;
};

/// Strip of width m: states 0, m and m+1 absorb, 1..m-1 are interior, and the
/// walk starts at m-1.
class SlitSpec {
public:
  /// Throws std::invalid_argument unless m >= 2.
  explicit SlitSpec(int m);

  int m() const { return m_; }
  int start() const { return m_ - 1; }

  friend bool operator==(const SlitSpec&, const SlitSpec&) = default;

private:
  int m_;
};

} // namespace slitpath
