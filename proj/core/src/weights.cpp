#include "slitpath/weights.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace slitpath {

Weights::Weights(BigRat a1, BigRat a2, BigRat a3)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)) {
  if (a1_.sign() <= 0)
    throw std::invalid_argument("weight a1 must be positive (got " + a1_.str() + ")");
  if (a2_.sign() < 0)
    throw std::invalid_argument("weight a2 must be non-negative (got " + a2_.str() + ")");
  if (a3_.sign() <= 0)
    throw std::invalid_argument("weight a3 must be positive (got " + a3_.str() + ")");
}

Weights Weights::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    parts.push_back(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  if (parts.size() != 3)
    throw std::invalid_argument("weights must be a triple a1,a2,a3 (got '" + std::string(text) + "')");
  return Weights(BigRat::parse(parts[0]), BigRat::parse(parts[1]), BigRat::parse(parts[2]));
}

std::string Weights::str() const { return a1_.str() + "," + a2_.str() + "," + a3_.str(); }

SlitSpec::SlitSpec(int m) : m_(m) {
  if (m < 2)
    throw std::invalid_argument("m must be at least 2 (got " + std::to_string(m) + ")");
}

} // namespace slitpath
