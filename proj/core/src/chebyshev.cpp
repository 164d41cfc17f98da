#include "slitpath/chebyshev.hpp"

#include <deque>
#include <mutex>

namespace slitpath {

std::complex<double> ChebV::evaluate(std::complex<double> y) const {
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < coefficients.size(); ++j)
    acc += coefficients[j].get_d() * std::pow(y, static_cast<int>(order - 2 * j));
  return acc;
}

namespace {

// Coefficients by ascending power of y are easier to recur on; the table is
// converted to the descending t[j] layout on insertion.
struct ChebTable {
  std::mutex mutex;
  std::deque<ChebV> entries;
  std::vector<mpz_class> prev_ascending;
  std::vector<mpz_class> curr_ascending;
};

ChebTable& table() {
  static ChebTable t;
  return t;
}

ChebV from_ascending(unsigned k, const std::vector<mpz_class>& ascending) {
  ChebV v;
  v.order = k;
  for (unsigned j = 0; 2 * j <= k; ++j)
    v.coefficients.push_back(ascending[k - 2 * j]);
  return v;
}

} // namespace

const ChebV& cheb_v(unsigned k) {
  ChebTable& t = table();
  std::lock_guard lock(t.mutex);
  if (t.entries.empty()) {
    t.prev_ascending = {1};
    t.curr_ascending = {0, 1};
    t.entries.push_back(from_ascending(0, t.prev_ascending));
    t.entries.push_back(from_ascending(1, t.curr_ascending));
  }
  while (t.entries.size() <= k) {
    std::vector<mpz_class> next(t.curr_ascending.size() + 1, 0);
    for (std::size_t i = 0; i < t.curr_ascending.size(); ++i)
      next[i + 1] += 2 * t.curr_ascending[i];
    for (std::size_t i = 0; i < t.prev_ascending.size(); ++i)
      next[i] += t.prev_ascending[i];
    t.prev_ascending = std::move(t.curr_ascending);
    t.curr_ascending = std::move(next);
    t.entries.push_back(from_ascending(static_cast<unsigned>(t.entries.size()), t.curr_ascending));
  }
  return t.entries[k];
}

} // namespace slitpath
