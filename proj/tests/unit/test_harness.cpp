#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "slitpath/genfun.hpp"
#include "slitpath/sweep.hpp"
#include "test_support.hpp"

namespace slitpath::harness {
namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int m = lo; m <= hi; ++m)
    out.push_back(m);
  return out;
}

const CheckResult* find_check(const InstanceReport& inst, const std::string& name) {
  for (const CheckResult& c : inst.checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    n += c == '\n';
  return n;
}

TEST(Sweep, AllOraclesAgree) {
  const std::vector<Weights> weights{Weights(1, 1, 1), Weights(1, 3, 2), Weights(1, 0, 2)};
  const auto ms = range(2, 10);
  const VerificationReport report = sweep_equivalence(ms, weights, 24);
  ASSERT_EQ(report.instances.size(), 27u);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.failed_instances(), 0u);
  for (const InstanceReport& inst : report.instances)
    EXPECT_EQ(inst.checks.size(), 5u) << "m=" << inst.m;
  // Ordered by m, then weight index.
  EXPECT_EQ(report.instances[0].m, 2);
  EXPECT_EQ(report.instances[1].weights, weights[1]);
  EXPECT_EQ(report.instances.back().m, 10);
}

TEST(Sweep, EmptyWeightSet) {
  const auto ms = range(2, 5);
  EXPECT_TRUE(sweep_equivalence(ms, std::span<const Weights>{}, 20).instances.empty());
}

TEST(Sweep, OrderTooLow) {
  const auto ms = range(2, 10);
  const std::vector<Weights> weights{Weights(1, 1, 1)};
  EXPECT_THROW(sweep_equivalence(ms, weights, 8), std::invalid_argument);
  EXPECT_NO_THROW(sweep_equivalence(ms, weights, 9));
}

TEST(Sweep, CorruptedDenominatorIsPinpointed) {
  SweepOptions opts;
  opts.denominator_hook = [](const SlitSpec&, const Weights&, Poly d) { return d + Poly::monomial(1, 4); };
  const std::vector<int> ms{9};
  const std::vector<Weights> weights{Weights(1, 3, 2)};
  const VerificationReport report = sweep_equivalence(ms, weights, 20, opts);
  ASSERT_EQ(report.instances.size(), 1u);
  const InstanceReport& inst = report.instances[0];
  EXPECT_FALSE(inst.pass());
  EXPECT_EQ(report.failed_instances(), 1u);
  const CheckResult* c = find_check(inst, "genfun_vs_matrix");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->pass);
  ASSERT_TRUE(c->first_discrepancy.has_value());
  EXPECT_EQ(*c->first_discrepancy, 12u);
  EXPECT_NE(c->detail.find("first mismatch at z^12"), std::string::npos) << c->detail;
  // Fails fast: nothing runs after the failing check.
  EXPECT_EQ(inst.checks.back().name, "genfun_vs_matrix");
}

TEST(Sweep, BadConstantTermFailsShape) {
  SweepOptions opts;
  opts.denominator_hook = [](const SlitSpec&, const Weights&, Poly d) { return d + Poly{1}; };
  const std::vector<int> ms{5};
  const std::vector<Weights> weights{Weights(1, 1, 1)};
  const VerificationReport report = sweep_equivalence(ms, weights, 20, opts);
  ASSERT_EQ(report.instances[0].checks.size(), 1u);
  EXPECT_EQ(report.instances[0].checks[0].name, "denominator_shape");
  EXPECT_FALSE(report.instances[0].checks[0].pass);
}

TEST(Sweep, SingleOracleSubsets) {
  const auto ms = range(2, 8);
  const std::vector<Weights> weights{Weights(BigRat(1, 2), BigRat(1, 3), BigRat(1, 6))};
  for (Oracle o : {Oracle::matrix, Oracle::enumeration, Oracle::charpoly}) {
    SweepOptions opts;
    opts.oracles = {o};
    const VerificationReport r = sweep_equivalence(ms, weights, 22, opts);
    EXPECT_TRUE(r.pass()) << to_string(o);
    for (const InstanceReport& inst : r.instances)
      EXPECT_EQ(inst.checks.size(), 2u);
  }
  SweepOptions none;
  none.oracles = {Oracle::matrix, Oracle::charpoly};
  const VerificationReport r = sweep_equivalence(ms, weights, 22, none);
  EXPECT_EQ(find_check(r.instances[0], "matrix_vs_enumeration"), nullptr);
  EXPECT_EQ(find_check(r.instances[0], "genfun_vs_enumeration"), nullptr);
}

TEST(Sweep, OracleNames) {
  for (Oracle o : {Oracle::matrix, Oracle::enumeration, Oracle::charpoly})
    EXPECT_EQ(parse_oracle(to_string(o)), o);
  EXPECT_FALSE(parse_oracle("brute").has_value());
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const auto ms = range(2, 10);
  const auto weights = testing::standard_weights();
  SweepOptions one;
  one.threads = 1;
  SweepOptions four;
  four.threads = 4;
  const std::string a = serialize(sweep_equivalence(ms, weights, 25, one));
  const std::string b = serialize(sweep_equivalence(ms, weights, 25, four));
  EXPECT_EQ(a, b);
}

TEST(Report, JsonRoundTrip) {
  const auto ms = range(2, 6);
  const auto weights = testing::standard_weights();
  VerificationReport report = sweep_equivalence(ms, weights, 20);
  report.instances.push_back(conjecture_instance(9, Weights(1, 1, 1)));
  const std::string text = serialize(report);
  const auto parsed = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(parsed.dump(2), text);
  EXPECT_EQ(parsed["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(serialize(report_from_json(parsed)), text);
  EXPECT_EQ(parsed["instances"][0]["weights"]["a1"], "1/1");
}

TEST(Report, TimingOnlyWhenRequested) {
  const std::vector<int> ms{4};
  const std::vector<Weights> weights{Weights(1, 1, 1)};
  const VerificationReport report = sweep_equivalence(ms, weights, 10);
  EXPECT_EQ(serialize(report).find("seconds"), std::string::npos);
  EXPECT_NE(serialize(report, true).find("seconds"), std::string::npos);
}

TEST(Report, SchemaMismatchRejected) {
  EXPECT_THROW(report_from_json(nlohmann::ordered_json{{"schema_version", 99}, {"instances", nlohmann::json::array()}}),
               std::invalid_argument);
  EXPECT_THROW(report_from_json(nlohmann::ordered_json::object()), std::invalid_argument);
}

TEST(Report, CsvHeaders) {
  const VerificationReport conj = sweep_conjecture(12, Weights(1, 1, 1));
  const std::string csv = conjecture_csv(conj);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "m,predicted,observed");
  EXPECT_EQ(count_lines(csv), 11u);
  EXPECT_NE(csv.find("\n9,5,5\n"), std::string::npos);

  const std::vector<int> ms{3};
  const std::vector<Weights> weights{Weights(1, 1, 1)};
  const std::string checks = checks_csv(sweep_equivalence(ms, weights, 10));
  EXPECT_EQ(checks.substr(0, checks.find('\n')), "m,a1,a2,a3,order,check,pass,detail");
  EXPECT_EQ(count_lines(checks), 6u);
}

TEST(Conjecture, HoldsThroughSixty) {
  const VerificationReport report = sweep_conjecture(60, Weights(1, 1, 1));
  ASSERT_EQ(report.instances.size(), 58u);
  EXPECT_TRUE(report.pass());
  for (const InstanceReport& inst : report.instances) {
    ASSERT_TRUE(inst.conjecture.has_value());
    EXPECT_EQ(inst.conjecture->observed, inst.conjecture->predicted) << "m=" << inst.m;
    EXPECT_EQ(inst.conjecture->predicted, 2 * (inst.m - 1) / 3);
  }
}

TEST(Conjecture, SingleInstances) {
  const InstanceReport nine = conjecture_instance(9, Weights(1, 1, 1));
  EXPECT_EQ(nine.conjecture->predicted, 5);
  EXPECT_EQ(nine.conjecture->observed, 5);
  EXPECT_TRUE(nine.pass());
  EXPECT_NE(find_check(nine, "next_term_vanishes"), nullptr);

  const InstanceReport two = conjecture_instance(2, Weights(1, 1, 1));
  EXPECT_EQ(two.conjecture->predicted, 0);
  EXPECT_EQ(two.conjecture->observed, 0);
  EXPECT_EQ(observed_min_terms(SlitSpec(9), Weights(1, 3, 2)), 5);
  EXPECT_THROW(sweep_conjecture(2, Weights(1, 1, 1)), std::invalid_argument);
}

} // namespace
} // namespace slitpath::harness
