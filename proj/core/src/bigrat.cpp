#include "slitpath/bigrat.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace slitpath {

BigRat::BigRat(long numerator, long denominator) {
  if (denominator == 0)
    throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
}

BigRat::BigRat(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0)
    throw std::domain_error("zero denominator");
  value_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
      s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
      digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("invalid rational literal: '" + std::string(s) + "'");
    std::string owned(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(owned, 10);
  };

  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return BigRat(parse_int(text));

  const mpz_class num = parse_int(trim(text.substr(0, slash)));
  const mpz_class den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0)
    throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "' has zero denominator");
  return BigRat(mpq_class(num, den));
}

std::string BigRat::str() const { return value_.get_str(); }

std::string BigRat::fraction_str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool BigRat::is_integer() const { return value_.get_den() == 1; }

BigRat BigRat::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  BigRat out;
  out.value_ = mpq_class(num, den); // already coprime
  return out;
}

BigRat BigRat::operator-() const {
  BigRat out;
  out.value_ = -value_;
  return out;
}

BigRat& BigRat::operator+=(const BigRat& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRat& BigRat::operator-=(const BigRat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRat& BigRat::operator*=(const BigRat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRat& BigRat::operator/=(const BigRat& rhs) {
  if (rhs.is_zero())
    throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const BigRat& lhs, const BigRat& rhs) {
  const int c = cmp(lhs.value_, rhs.value_);
  if (c < 0)
    return std::strong_ordering::less;
  if (c > 0)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRat& value) { return os << value.str(); }

} // namespace slitpath
