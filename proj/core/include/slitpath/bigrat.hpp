#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace slitpath {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class BigRat {
public:
  BigRat() = default;
  BigRat(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
  BigRat(long numerator, long denominator);
  explicit BigRat(const mpz_class& integer) : value_(integer) {}
  explicit BigRat(mpq_class value);

  /// Parses "p/q" or a plain integer; throws std::invalid_argument.
  static BigRat parse(std::string_view text);

  /// Canonical text: "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Always "p/q", including q = 1.
  std::string fraction_str() const;

  double to_double() const { return value_.get_d(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  BigRat pow(unsigned exponent) const;

  BigRat operator-() const;
  BigRat& operator+=(const BigRat& rhs);
  BigRat& operator-=(const BigRat& rhs);
  BigRat& operator*=(const BigRat& rhs);
  /// Throws std::domain_error on division by zero.
  BigRat& operator/=(const BigRat& rhs);

  friend BigRat operator+(BigRat lhs, const BigRat& rhs) { return lhs += rhs; }
  friend BigRat operator-(BigRat lhs, const BigRat& rhs) { return lhs -= rhs; }
  friend BigRat operator*(BigRat lhs, const BigRat& rhs) { return lhs *= rhs; }
  friend BigRat operator/(BigRat lhs, const BigRat& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRat& lhs, const BigRat& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const BigRat& lhs, const BigRat& rhs);

private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& value);

} // namespace slitpath
