#include "slitpath/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace slitpath::harness {

using nlohmann::ordered_json;

bool InstanceReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool VerificationReport::pass() const {
  return std::all_of(instances.begin(), instances.end(), [](const InstanceReport& i) { return i.pass(); });
}

std::size_t VerificationReport::failed_instances() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const InstanceReport& i) { return !i.pass(); }));
}

ordered_json to_json(const VerificationReport& report, bool include_timing) {
  ordered_json root;
  root["schema_version"] = kReportSchemaVersion;
  ordered_json instances = ordered_json::array();
  for (const auto& inst : report.instances) {
    ordered_json j;
    j["m"] = inst.m;
    j["weights"] = {{"a1", inst.weights.a1().fraction_str()},
                    {"a2", inst.weights.a2().fraction_str()},
                    {"a3", inst.weights.a3().fraction_str()}};
    if (inst.order)
      j["order"] = *inst.order;
    ordered_json checks = ordered_json::array();
    for (const auto& c : inst.checks) {
      ordered_json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      cj["detail"] = c.detail;
      if (include_timing)
        cj["seconds"] = c.seconds;
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (inst.conjecture)
      j["conjecture"] = {{"predicted", inst.conjecture->predicted}, {"observed", inst.conjecture->observed}};
    instances.push_back(std::move(j));
  }
  root["instances"] = std::move(instances);
  return root;
}

std::string serialize(const VerificationReport& report, bool include_timing) {
  return to_json(report, include_timing).dump(2);
}

VerificationReport report_from_json(const ordered_json& json) {
  try {
    if (json.at("schema_version").get<int>() != kReportSchemaVersion)
      throw std::invalid_argument("unsupported report schema_version");
    VerificationReport report;
    for (const auto& j : json.at("instances")) {
      const auto& w = j.at("weights");
      InstanceReport inst{j.at("m").get<int>(),
                          Weights(BigRat::parse(w.at("a1").get<std::string>()),
                                  BigRat::parse(w.at("a2").get<std::string>()),
                                  BigRat::parse(w.at("a3").get<std::string>())),
                          std::nullopt,
                          {},
                          std::nullopt};
      if (j.contains("order"))
        inst.order = j.at("order").get<int>();
      for (const auto& c : j.at("checks")) {
        CheckResult check;
        check.name = c.at("name").get<std::string>();
        check.pass = c.at("pass").get<bool>();
        check.detail = c.at("detail").get<std::string>();
        if (c.contains("seconds"))
          check.seconds = c.at("seconds").get<double>();
        inst.checks.push_back(std::move(check));
      }
      if (j.contains("conjecture"))
        inst.conjecture = ConjectureResult{j["conjecture"].at("predicted").get<int>(),
                                           j["conjecture"].at("observed").get<int>()};
      report.instances.push_back(std::move(inst));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string conjecture_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "m,predicted,observed\n";
  for (const auto& inst : report.instances)
    if (inst.conjecture)
      os << inst.m << ',' << inst.conjecture->predicted << ',' << inst.conjecture->observed << '\n';
  return os.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

} // namespace

std::string checks_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "m,a1,a2,a3,order,check,pass,detail\n";
  for (const auto& inst : report.instances)
    for (const auto& c : inst.checks)
      os << inst.m << ',' << inst.weights.a1().fraction_str() << ',' << inst.weights.a2().fraction_str() << ','
         << inst.weights.a3().fraction_str() << ',' << (inst.order ? std::to_string(*inst.order) : "") << ','
         << csv_field(c.name) << ',' << (c.pass ? "true" : "false") << ',' << csv_field(c.detail) << '\n';
  return os.str();
}

} // namespace slitpath::harness
