#include "slitpath/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "slitpath/charpoly.hpp"
#include "slitpath/enumerate.hpp"
#include "slitpath/genfun.hpp"
#include "slitpath/transition_matrix.hpp"

namespace slitpath::harness {

std::string_view to_string(Oracle oracle) {
  switch (oracle) {
  case Oracle::matrix:
    return "matrix";
  case Oracle::enumeration:
    return "enumeration";
  case Oracle::charpoly:
    return "charpoly";
  }
  return "unknown";
}

std::optional<Oracle> parse_oracle(std::string_view name) {
  for (Oracle o : {Oracle::matrix, Oracle::enumeration, Oracle::charpoly})
    if (to_string(o) == name)
      return o;
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
CheckResult timed(std::string name, Fn&& fn) {
  const auto start = Clock::now();
  CheckResult result;
  try {
    result = fn();
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.name = std::move(name);
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

CheckResult compare_coefficients(std::span<const BigRat> expected, std::span<const BigRat> actual) {
  CheckResult r;
  const std::size_t n = std::max(expected.size(), actual.size());
  for (std::size_t i = 0; i < n; ++i) {
    const BigRat e = i < expected.size() ? expected[i] : BigRat{};
    const BigRat a = i < actual.size() ? actual[i] : BigRat{};
    if (e != a) {
      r.first_discrepancy = i;
      r.detail = "first mismatch at z^" + std::to_string(i) + ": expected " + e.fraction_str() + ", got " +
                 a.fraction_str();
      return r;
    }
  }
  r.pass = true;
  r.detail = std::to_string(n) + " coefficients agree";
  return r;
}

bool enabled(const SweepOptions& opts, Oracle o) {
  return std::find(opts.oracles.begin(), opts.oracles.end(), o) != opts.oracles.end();
}

InstanceReport equivalence_instance(int m, const Weights& w, int order, const SweepOptions& opts) {
  InstanceReport inst{m, w, order, {}, std::nullopt};
  const SlitSpec spec(m);
  auto push = [&](CheckResult c) {
    inst.checks.push_back(std::move(c));
    return inst.checks.back().pass;
  };

  Poly den;
  Series series;
  const bool ok = push(timed("denominator_shape", [&] {
    den = denominator(spec, w);
    if (opts.denominator_hook)
      den = opts.denominator_hook(spec, w, den);
    CheckResult r;
    if (den.coeff(0) != BigRat(1)) {
      r.detail = "constant term is " + den.coeff(0).fraction_str();
      r.first_discrepancy = 0;
    } else if (den.degree() > m - 1) {
      r.detail = "degree " + std::to_string(den.degree()) + " exceeds m-1";
      r.first_discrepancy = static_cast<std::size_t>(den.degree());
    } else {
      r.pass = true;
      r.detail = "degree " + std::to_string(den.degree());
    }
    series = genfun_from_denominator(spec, w, den, order).series;
    return r;
  }));
  if (!ok)
    return inst;

  Series via_matrix;
  Series via_enum;
  if (enabled(opts, Oracle::matrix) && !push(timed("genfun_vs_matrix", [&] {
        via_matrix = oracles::matrix_series(spec, w, order);
        return compare_coefficients(via_matrix, series);
      })))
    return inst;
  if (enabled(opts, Oracle::enumeration) && !push(timed("genfun_vs_enumeration", [&] {
        via_enum = oracles::enumerate_paths(spec, w, order);
        return compare_coefficients(via_enum, series);
      })))
    return inst;
  if (enabled(opts, Oracle::matrix) && enabled(opts, Oracle::enumeration) &&
      !push(timed("matrix_vs_enumeration", [&] { return compare_coefficients(via_enum, via_matrix); })))
    return inst;
  if (enabled(opts, Oracle::charpoly))
    push(timed("denominator_vs_charpoly", [&] {
      const Poly cp = oracles::interior_charpoly(spec, w);
      return compare_coefficients(cp.coefficients(), den.coefficients());
    }));
  return inst;
}

// Runs task(i) for i in [0, count) on a small pool; results are written by
// index so ordering is independent of scheduling.
template <typename Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      task(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < count; i = next++)
          task(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool)
    th.join();
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

} // namespace

VerificationReport sweep_equivalence(std::span<const int> m_values, std::span<const Weights> weight_sets, int order,
                                     const SweepOptions& options) {
  if (!m_values.empty()) {
    const int max_m = *std::max_element(m_values.begin(), m_values.end());
    if (order < max_m - 1)
      throw std::invalid_argument("order " + std::to_string(order) + " is below max(m)-1 = " +
                                  std::to_string(max_m - 1));
  }
  for (int m : m_values)
    SlitSpec{m}; // validates

  std::vector<int> ms(m_values.begin(), m_values.end());
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

  VerificationReport report;
  if (weight_sets.empty())
    return report;

  const std::size_t count = ms.size() * weight_sets.size();
  std::vector<std::optional<InstanceReport>> slots(count);
  parallel_for(count, options.threads, [&](std::size_t i) {
    const int m = ms[i / weight_sets.size()];
    slots[i] = equivalence_instance(m, weight_sets[i % weight_sets.size()], order, options);
  });
  for (auto& s : slots)
    report.instances.push_back(std::move(*s));
  return report;
}

int observed_min_terms(const SlitSpec& spec, const Weights& w) {
  const int m = spec.m();
  const Poly target = oracles::interior_charpoly(spec, w).truncated(static_cast<std::size_t>(m - 1));
  Poly partial = Poly::constant(1);
  for (int n = 0; n <= m - 1; ++n) {
    if (n > 0)
      partial += g_term(n, spec, w);
    if (partial.truncated(static_cast<std::size_t>(m - 1)) == target)
      return n;
  }
  return -1;
}

InstanceReport conjecture_instance(int m, const Weights& w) {
  const SlitSpec spec(m);
  InstanceReport inst{m, w, std::nullopt, {}, std::nullopt};
  const int predicted = min_terms(m);

  int observed = -1;
  inst.checks.push_back(timed("min_terms", [&] {
    observed = observed_min_terms(spec, w);
    CheckResult r;
    r.pass = observed == predicted;
    r.detail = "predicted " + std::to_string(predicted) + ", observed " + std::to_string(observed);
    return r;
  }));
  inst.conjecture = ConjectureResult{predicted, observed};

  inst.checks.push_back(timed("case_table", [&] {
    // m = 3v+2 and m = 3v+1 give n_max = 2v, m = 3v gives 2v-1; Sum1 = v-1.
    const int residue = m % 3;
    const int v = residue == 0 ? m / 3 : (m - residue) / 3;
    const int expected_nmax = residue == 0 ? 2 * v - 1 : 2 * v;
    const long sum1 = floor_div(predicted - 1, 2);
    CheckResult r;
    r.pass = predicted == expected_nmax && sum1 == v - 1;
    std::ostringstream os;
    os << "m = 3v" << (residue == 0 ? "" : residue == 1 ? "+1" : "+2") << ", v = " << v << ": n_max " << predicted
       << " (table " << expected_nmax << "), Sum1 " << sum1 << " (table " << v - 1 << ")";
    r.detail = os.str();
    return r;
  }));

  if (predicted >= 1) {
    inst.checks.push_back(timed("last_term_degree", [&] {
      const Poly last = g_term(predicted, spec, w);
      CheckResult r;
      r.pass = last.degree() == m - 1;
      r.detail = "G_" + std::to_string(predicted) + " has degree " + std::to_string(last.degree()) +
                 " (lowest exponent " +
                 (last.low_degree() ? std::to_string(*last.low_degree()) : std::string("none")) + ")";
      return r;
    }));
    inst.checks.push_back(timed("last_term_necessary", [&] {
      const BigRat with = partial_denominator(spec, w, predicted).coeff(static_cast<std::size_t>(m - 1));
      const BigRat without = partial_denominator(spec, w, predicted - 1).coeff(static_cast<std::size_t>(m - 1));
      CheckResult r;
      r.pass = with != without;
      r.detail = "[z^" + std::to_string(m - 1) + "] with " + std::to_string(predicted) + " terms " +
                 with.fraction_str() + ", without last " + without.fraction_str();
      return r;
    }));
  }

  if (predicted + 1 <= m - 1) {
    inst.checks.push_back(timed("next_term_vanishes", [&] {
      const Poly next = g_term(predicted + 1, spec, w);
      const Poly low = next.truncated(static_cast<std::size_t>(m - 1));
      CheckResult r;
      r.pass = low.is_zero();
      r.detail = "G_" + std::to_string(predicted + 1) + " through z^" + std::to_string(m - 1) + ": " +
                 low.to_string() + "; full term " + next.to_string();
      return r;
    }));
  }
  return inst;
}

VerificationReport sweep_conjecture(int m_max, const Weights& w, unsigned threads) {
  if (m_max < 3)
    throw std::invalid_argument("m_max must be at least 3 (got " + std::to_string(m_max) + ")");
  const std::size_t count = static_cast<std::size_t>(m_max - 2);
  std::vector<std::optional<InstanceReport>> slots(count);
  parallel_for(count, threads, [&](std::size_t i) { slots[i] = conjecture_instance(static_cast<int>(i) + 3, w); });

  VerificationReport report;
  for (auto& s : slots)
    report.instances.push_back(std::move(*s));
  return report;
}

} // namespace slitpath::harness
