#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "slitpath/poly.hpp"
#include "slitpath/report.hpp"
#include "slitpath/weights.hpp"

namespace slitpath::harness {

/// Independent oracles the generating function is checked against.
enum class Oracle { matrix, enumeration, charpoly };

std::string_view to_string(Oracle oracle);
std::optional<Oracle> parse_oracle(std::string_view name);

struct SweepOptions {
  std::vector<Oracle> oracles{Oracle::matrix, Oracle::enumeration, Oracle::charpoly};
  /// Test hook: replaces the closed-form denominator before the series is
  /// expanded (fault injection).
  std::function<Poly(const SlitSpec&, const Weights&, Poly)> denominator_hook;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// One instance per (m, weight set), ordered by m then weight index.
///
/// Checks per instance, stopping at the first failure:
///   denominator_shape       constant term 1 and degree <= m-1
///   genfun_vs_matrix        series == matrix_series
///   genfun_vs_enumeration   series == enumerate_paths
///   matrix_vs_enumeration   when both of those oracles are enabled
///   denominator_vs_charpoly denominator == interior_charpoly
///
/// Throws std::invalid_argument if order < max(m) - 1.
VerificationReport sweep_equivalence(std::span<const int> m_values, std::span<const Weights> weight_sets, int order,
                                     const SweepOptions& options = {});

/// Smallest N such that 1 + G_1 + ... + G_N matches det(I - zB) through
/// degree m-1, or -1 if no N <= m-1 does.
int observed_min_terms(const SlitSpec& spec, const Weights& w);

/// Conjecture and case-table checks for a single m.
InstanceReport conjecture_instance(int m, const Weights& w);

/// conjecture_instance for m = 3..m_max. Throws std::invalid_argument if
/// m_max < 3.
VerificationReport sweep_conjecture(int m_max, const Weights& w, unsigned threads = 0);

} // namespace slitpath::harness
