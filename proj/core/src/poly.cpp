#include "slitpath/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace slitpath {

Poly::Poly(std::vector<BigRat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(BigRat value) { return Poly(std::vector<BigRat>{std::move(value)}); }

Poly Poly::monomial(BigRat coefficient, std::size_t exponent) {
  std::vector<BigRat> c(exponent + 1);
  c[exponent] = std::move(coefficient);
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

std::optional<std::size_t> Poly::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero())
      return i;
  return std::nullopt;
}

BigRat Poly::coeff(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : BigRat{};
}

Poly Poly::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1)
    return *this;
  return Poly(std::vector<BigRat>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(max_degree + 1)));
}

std::complex<double> Poly::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + it->to_double();
  return acc;
}

double Poly::evaluate(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + it->to_double();
  return acc;
}

std::string Poly::to_string(char variable) const {
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigRat& c = coeffs_[i];
    if (c.is_zero())
      continue;
    const BigRat mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;

    const bool unit = mag == BigRat(1);
    if (i == 0) {
      os << mag.str();
      continue;
    }
    if (!unit)
      os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")");
    os << variable;
    if (i > 1)
      os << '^' << i;
  }
  return os.str();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigRat& scale) {
  if (scale.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_)
    c *= scale;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero())
    return {};
  std::vector<BigRat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

} // namespace slitpath
