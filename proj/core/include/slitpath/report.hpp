#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slitpath/weights.hpp"

namespace slitpath::harness {

inline constexpr int kReportSchemaVersion = 1;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  /// Exponent of the first mismatching coefficient, when a comparison failed.
  std::optional<std::size_t> first_discrepancy;
  double seconds = 0.0;
};

struct ConjectureResult {
  int predicted = 0;
  int observed = 0;
};

struct InstanceReport {
  int m = 0;
  Weights weights;
  std::optional<int> order;
  std::vector<CheckResult> checks;
  std::optional<ConjectureResult> conjecture;

  bool pass() const;
};

struct VerificationReport {
  std::vector<InstanceReport> instances;

  bool pass() const;
  std::size_t failed_instances() const;
};

/// {schema_version, instances:[{m, weights:{a1,a2,a3}, order?, checks:[{name,
/// pass, detail}], conjecture?:{predicted, observed}}]}. Rationals are "p/q"
/// strings. Timings appear only when include_timing is set, so the default
/// output is a pure function of the inputs.
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = false);
std::string serialize(const VerificationReport& report, bool include_timing = false);

/// Inverse of to_json (timings and first_discrepancy are not recovered).
/// Throws std::invalid_argument on schema mismatch.
VerificationReport report_from_json(const nlohmann::ordered_json& json);

/// "m,predicted,observed" rows for instances carrying a conjecture result.
std::string conjecture_csv(const VerificationReport& report);

/// "m,a1,a2,a3,order,check,pass,detail" rows.
std::string checks_csv(const VerificationReport& report);

} // namespace slitpath::harness
