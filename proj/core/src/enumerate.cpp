#include "slitpath/enumerate.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slitpath::oracles {

int enumeration_budget() {
  if (const char* env = std::getenv("SLITPATH_MAX_ENUM")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0)
        return v;
    } catch (const std::exception&) {
    }
  }
  return 30;
}

namespace {

class FirstPassage {
public:
  FirstPassage(int m, const Weights& w, int order)
      : m_(m), w_(w), memo_(static_cast<std::size_t>(m + 2) * static_cast<std::size_t>(order + 1)) {}

  // Weight of paths from `state` absorbed at 0 after exactly `steps` steps.
  const BigRat& weight(int state, int steps) {
    auto& slot = memo_[index(state, steps)];
    if (slot)
      return *slot;

    BigRat acc;
    if (state == 0) {
      acc = steps == 0 ? BigRat(1) : BigRat{};
    } else if (state >= m_ || steps == 0) {
      // right barrier, or still interior with no steps left
    } else {
      acc += w_.a1() * weight(state - 1, steps - 1);
      if (!w_.a2().is_zero())
        acc += w_.a2() * weight(state + 1, steps - 1);
      acc += w_.a3() * weight(state + 2, steps - 1);
    }
    slot = std::move(acc);
    return *slot;
  }

private:
  std::size_t index(int state, int steps) const {
    return static_cast<std::size_t>(steps) * static_cast<std::size_t>(m_ + 2) + static_cast<std::size_t>(state);
  }

  int m_;
  const Weights& w_;
  std::vector<std::optional<BigRat>> memo_;
};

void check_args(const SlitSpec& spec, int start, int order) {
  if (start < 0 || start > spec.m() + 1)
    throw std::out_of_range("start state " + std::to_string(start) + " outside 0..m+1");
  if (order < 0)
    throw std::invalid_argument("order must be non-negative");
}

} // namespace

Series enumerate_paths(const SlitSpec& spec, const Weights& w, int order) {
  return enumerate_paths_from(spec, w, spec.start(), order);
}

Series enumerate_paths_from(const SlitSpec& spec, const Weights& w, int start, int order) {
  check_args(spec, start, order);
  if (order > enumeration_budget())
    throw std::length_error("enumeration budget exceeded");

  FirstPassage search(spec.m(), w, order);
  Series out(static_cast<std::size_t>(order + 1));
  for (int n = 0; n <= order; ++n)
    out[static_cast<std::size_t>(n)] = search.weight(start, n);
  return out;
}

Series enumerate_paths_exhaustive(const SlitSpec& spec, const Weights& w, int start, int order,
                                  std::uint64_t max_nodes) {
  check_args(spec, start, order);
  const int m = spec.m();
  Series out(static_cast<std::size_t>(order + 1));
  std::uint64_t visited = 0;

  const BigRat* step_weight[3] = {&w.a1(), &w.a2(), &w.a3()};
  constexpr int step_delta[3] = {-1, 1, 2};

  struct Frame {
    int state;
    int depth;
    BigRat weight;
  };
  std::vector<Frame> stack;
  stack.push_back({start, 0, BigRat(1)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (++visited > max_nodes)
      throw std::length_error("enumeration budget exceeded");

    if (f.state == 0) {
      out[static_cast<std::size_t>(f.depth)] += f.weight;
      continue;
    }
    if (f.state >= m || f.depth == order)
      continue;
    for (int i = 0; i < 3; ++i) {
      if (step_weight[i]->is_zero())
        continue;
      stack.push_back({f.state + step_delta[i], f.depth + 1, f.weight * *step_weight[i]});
    }
  }
  return out;
}

} // namespace slitpath::oracles
