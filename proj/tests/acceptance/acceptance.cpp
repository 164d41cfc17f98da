// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "slitpath/binomial.hpp"
#include "slitpath/charpoly.hpp"
#include "slitpath/enumerate.hpp"
#include "slitpath/genfun.hpp"
#include "slitpath/numeric.hpp"
#include "slitpath/sweep.hpp"
#include "slitpath/transition_matrix.hpp"
#include "test_support.hpp"

using namespace slitpath;

namespace {

struct Outcome {
  bool pass = true;
  std::string failure;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      failure = what;
    }
  }
};

std::vector<double> to_doubles(const Series& s) {
  std::vector<double> out;
  for (const BigRat& c : s)
    out.push_back(c.to_double());
  return out;
}

void ac1(Outcome& o) {
  const SlitSpec spec(9);
  const Weights w(1, 3, 2);
  auto t = [](long c, std::size_t e) { return Poly::monomial(BigRat(c), e); };
  const std::vector<Poly> terms{t(-21, 2), t(-12, 3) + t(135, 4), t(120, 5) + t(-270, 6),
                                t(24, 6) + t(-216, 7) + t(81, 8), t(-36, 8)};
  for (int n = 1; n <= 5; ++n)
    o.require(g_term(n, spec, w) == terms[static_cast<std::size_t>(n - 1)], "G_" + std::to_string(n) + " differs");
  o.require(denominator(spec, w) == Poly{1, 0, -21, -12, 135, 120, -246, -216, 45}, "denominator differs");
  const Series expected{0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 21, 12, 306, 384, 3981, 7812, 50580, 130752, 649332,
                        1980432, 8487756};
  o.require(genfun(spec, w, 20).series == expected, "series differs");
  o.detail << "G_1..G_5, denominator and series through z^20 exact";
}

void ac2(Outcome& o) {
  const auto weights = testing::standard_weights();
  std::size_t instances = 0;
  for (int m = 2; m <= 10; ++m) {
    const std::vector<int> ms{m};
    const auto report = harness::sweep_equivalence(ms, weights, m + 15);
    instances += report.instances.size();
    for (const auto& inst : report.instances)
      for (const auto& c : inst.checks)
        o.require(c.pass, "m=" + std::to_string(m) + " (" + inst.weights.str() + ") " + c.name + ": " + c.detail);
    for (const auto& inst : report.instances)
      o.require(inst.checks.size() == 5, "m=" + std::to_string(m) + " ran " + std::to_string(inst.checks.size()) +
                                             " checks");
  }
  o.require(instances == 45, "expected 45 instances");
  o.detail << instances << " instances, 5 exact checks each, order m+15";
}

void ac3(Outcome& o) {
  const std::vector<Weights> weights{Weights(1, 0, 2), Weights(1, 0, 1), Weights(BigRat(1, 2), 0, BigRat(1, 6)),
                                     Weights(3, 0, BigRat(2, 5))};
  for (const Weights& w : weights)
    for (int m = 2; m <= 12; ++m) {
      const SlitSpec spec(m);
      o.require(genfun_a2_zero(spec, w, m + 15).series == genfun(spec, w, m + 15).series,
                "series differ at m=" + std::to_string(m) + " (" + w.str() + ")");
      o.require(a2_zero_denominator(spec, w) == denominator(spec, w),
                "denominators differ at m=" + std::to_string(m) + " (" + w.str() + ")");
    }
  int identities = 0;
  const Weights unit(1, 0, 1);
  for (int m = 2; m <= 12; ++m)
    for (int n = 1; 3 * n < m; ++n, ++identities)
      o.require(g_term(2 * n, SlitSpec(m), unit) ==
                    Poly::monomial(binom(3 * n - m, static_cast<unsigned long>(n)), static_cast<std::size_t>(3 * n)),
                "z^{3n} g_{2n} != C(3n-m, n) z^{3n} at m=" + std::to_string(m) + " n=" + std::to_string(n));
  o.detail << "m 2..12 over 4 weight sets; " << identities << " binomial identities";
}

void ac4(Outcome& o) {
  const auto report = harness::sweep_conjecture(60, Weights(1, 1, 1));
  o.require(report.instances.size() == 58, "expected 58 rows");
  bool next_checked = false;
  for (const auto& inst : report.instances) {
    o.require(inst.conjecture && inst.conjecture->observed == inst.conjecture->predicted,
              "m=" + std::to_string(inst.m) + " observed differs");
    for (const auto& c : inst.checks) {
      o.require(c.pass, "m=" + std::to_string(inst.m) + " " + c.name + ": " + c.detail);
      next_checked = next_checked || c.name == "next_term_vanishes";
    }
  }
  o.require(next_checked, "next-term check never ran");
  // Case table rows for v = 1..10.
  for (int v = 1; v <= 10; ++v) {
    o.require(min_terms(3 * v + 2) == 2 * v && min_terms(3 * v + 1) == 2 * v && min_terms(3 * v) == 2 * v - 1,
              "case table row v=" + std::to_string(v));
    const Poly last = g_term(2 * v, SlitSpec(3 * v + 2), Weights(1, 1, 1));
    o.require(last.low_degree() && *last.low_degree() == static_cast<std::size_t>(3 * v),
              "lowest exponent for m=3v+2, v=" + std::to_string(v));
  }
  o.detail << "m 3..60 observed == floor(2(m-1)/3); case table v 1..10; next term vanishes below z^m";
}

void ac5(Outcome& o) {
  const SlitSpec spec(9);
  const Weights w(1, 3, 2);
  const double z = 0.05;
  const double closed = oracles::closed_form_numeric(z, 1.0, spec, w);
  const double series = oracles::series_value(to_doubles(genfun(spec, w, 8 + 12).series), z);
  const double rel = std::abs(closed - series) / std::abs(closed);
  o.require(rel <= 1e-6, "closed form vs 13 series terms");
  const double general = oracles::general_start_numeric(z, 1.0, spec.start(), spec, w);
  const double rel_general = std::abs(general - closed) / std::abs(closed);
  o.require(rel_general <= 1e-9, "general start vs closed form");
  o.detail << "closed=" << closed << " series rel err " << rel << ", general start rel err " << rel_general;
}

void ac6(Outcome& o) {
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> lead(0.5, 3.0);
  double worst_identity = 0.0;
  double worst_fd = 0.0;
  auto record = [&](const oracles::ReductionReport& r, const std::string& label) {
    o.require(r.pass(1e-9, 1e-6), label);
    worst_identity = std::max(worst_identity, r.discriminant_error);
    for (const auto& id : r.roots) {
      worst_identity = std::max(worst_identity, id.derivative_error);
      worst_fd = std::max(worst_fd, id.inverse_derivative_error);
    }
  };
  int random = 0;
  while (random < 50) {
    const oracles::Cubic f{lead(rng), coef(rng), coef(rng)};
    const double q = coef(rng);
    if (std::abs(f.discriminant(q)) < 1e-6)
      continue; // distinct roots only
    record(oracles::reduction_identity_check(f, q), "random cubic " + std::to_string(random));
    ++random;
  }
  const Weights w(1, 3, 2);
  const double zs[] = {0.01, 0.02, 0.03, 0.05, 0.08};
  const double qs[] = {1.0, 0.4};
  int sampled = 0;
  for (double z : zs)
    for (double q : qs) {
      record(oracles::reduction_identity_check(oracles::characteristic_cubic(z, w), q),
             "characteristic cubic z=" + std::to_string(z) + " q=" + std::to_string(q));
      ++sampled;
    }
  o.detail << random << " random + " << sampled << " characteristic cubics; worst identity err " << worst_identity
           << ", worst finite-difference err " << worst_fd;
}

void ac7(Outcome& o) {
  const auto r = oracles::root_series_check(SlitSpec(9), Weights(1, 3, 2), 0.02, 5);
  o.require(r.residuals.size() == 5, "expected 5 residuals");
  o.require(r.monotone, "residuals not strictly decreasing");
  o.detail << "residuals";
  for (double v : r.residuals)
    o.detail << ' ' << v;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1 golden example (m=9, weights 1,3,2)", ac1},
      {"AC2 four-way oracle agreement", ac2},
      {"AC3 a2 = 0 special case", ac3},
      {"AC4 minimal term count conjecture", ac4},
      {"AC5 numeric closed form", ac5},
      {"AC6 root-difference identities", ac6},
      {"AC7 small-root series residuals", ac7},
  };
  const double limits[] = {1.0, 120.0, 0.0, 0.0, 0.0, 0.0, 0.0};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limits[i] > 0.0 && seconds >= limits[i]) {
      o.pass = false;
      o.failure = "took " + std::to_string(seconds) + " s, limit " + std::to_string(limits[i]) + " s";
    }
    failed += !o.pass;
    const std::string detail = o.failure.empty() ? o.detail.str() : o.failure + "; " + o.detail.str();
    std::printf("[%s] %s: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), detail.c_str(),
                seconds);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
