#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slitpath/bigrat.hpp"

namespace slitpath {

/// Dense univariate polynomial in z with exact rational coefficients.
///
/// coefficients()[i] multiplies z^i. Trailing zeros are always trimmed, so
/// the zero polynomial has an empty coefficient sequence.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<BigRat> coefficients);
  Poly(std::initializer_list<BigRat> coefficients)
      : Poly(std::vector<BigRat>(coefficients)) {}

  static Poly constant(BigRat value);
  static Poly monomial(BigRat coefficient, std::size_t exponent);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Lowest exponent with a nonzero coefficient.
  std::optional<std::size_t> low_degree() const;

  /// Coefficient of z^exponent (zero past the degree).
  BigRat coeff(std::size_t exponent) const;
  std::span<const BigRat> coefficients() const { return coeffs_; }

  /// Drops every term of degree above max_degree.
  Poly truncated(std::size_t max_degree) const;

  std::complex<double> evaluate(std::complex<double> z) const;
  double evaluate(double z) const;

  /// Human-readable form, e.g. "1 - 21z^2 + (1/2)z^3".
  std::string to_string(char variable = 'z') const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const BigRat& scale);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const BigRat& rhs) { return lhs *= rhs; }
  friend Poly operator*(const BigRat& lhs, Poly rhs) { return rhs *= lhs; }
  friend bool operator==(const Poly&, const Poly&) = default;

private:
  void trim();

  std::vector<BigRat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace slitpath
