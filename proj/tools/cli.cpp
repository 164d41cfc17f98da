#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "slitpath/genfun.hpp"
#include "slitpath/numeric.hpp"
#include "slitpath/report.hpp"
#include "slitpath/sweep.hpp"

namespace slitpath::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { human, json, csv };

struct FormatOptions {
  std::string format = "human";
  bool json = false;
  bool csv = false;

  Format resolve() const {
    if (json)
      return Format::json;
    if (csv)
      return Format::csv;
    if (format == "json")
      return Format::json;
    if (format == "csv")
      return Format::csv;
    return Format::human;
  }
};

void add_format(CLI::App* sub, FormatOptions& f) {
  auto* fmt = sub->add_option("--format", f.format, "Output format: human, json or csv")
                  ->check(CLI::IsMember({"human", "json", "csv"}));
  auto* json = sub->add_flag("--json", f.json, "Shorthand for --format json");
  auto* csv = sub->add_flag("--csv", f.csv, "Shorthand for --format csv");
  fmt->excludes(json)->excludes(csv);
  json->excludes(csv);
}

Weights parse_weights(const std::string& text) {
  try {
    return Weights::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid --weights '") + text + "': " + e.what());
  }
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size())
      throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + " '" + s + "'");
  }
}

/// "9", "2..10" or "2,3,7".
std::vector<int> parse_m_values(const std::string& text) {
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots), "--m range");
    const int hi = parse_int(text.substr(dots + 2), "--m range");
    if (hi < lo)
      throw UsageError("empty --m range '" + text + "'");
    for (int m = lo; m <= hi; ++m)
      out.push_back(m);
  } else {
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');)
      out.push_back(parse_int(part, "--m"));
  }
  for (int m : out)
    if (m < 2)
      throw UsageError("m must be at least 2 (got " + std::to_string(m) + ")");
  return out;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string fmt_complex(oracles::cplx v) {
  std::ostringstream os;
  os << std::setprecision(12) << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
  return os.str();
}

ordered_json sparse_terms(std::span<const BigRat> coefficients) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (!coefficients[i].is_zero())
      out.push_back({{"exponent", i}, {"coefficient", coefficients[i].fraction_str()}});
  return out;
}

ordered_json weights_json(const Weights& w) {
  return {{"a1", w.a1().fraction_str()}, {"a2", w.a2().fraction_str()}, {"a3", w.a3().fraction_str()}};
}

// ---------------------------------------------------------------- gf

struct GfOptions {
  int m = 0;
  std::string weights;
  int order = -1;
  std::string form = "general";
  FormatOptions format;
};

int cmd_gf(const GfOptions& o, std::ostream& out) {
  if (o.m < 2)
    throw UsageError("m must be at least 2 (got " + std::to_string(o.m) + ")");
  const Weights w = parse_weights(o.weights);
  const SlitSpec spec(o.m);
  const int order = o.order < 0 ? o.m - 1 + 12 : o.order;
  if (order < o.m - 1)
    throw UsageError("--order " + std::to_string(order) + " is below m-1 = " + std::to_string(o.m - 1));
  if (o.form == "a2zero" && !w.a2().is_zero())
    throw UsageError("--form a2zero requires a2 = 0");

  const GenFun f = o.form == "a2zero" ? genfun_a2_zero(spec, w, order) : genfun(spec, w, order);
  const Poly series(f.series);

  switch (o.format.resolve()) {
  case Format::json: {
    ordered_json j;
    j["m"] = o.m;
    j["weights"] = weights_json(w);
    j["order"] = order;
    j["numerator"] = {{"shift", f.numerator_shift}, {"scale", f.numerator_scale.fraction_str()}};
    j["denominator"] = sparse_terms(f.denominator.coefficients());
    j["series"] = sparse_terms(series.coefficients());
    out << j.dump(2) << '\n';
    break;
  }
  case Format::csv: {
    out << "part,exponent,coefficient\n";
    for (const auto& [name, poly] : {std::pair{"denominator", &f.denominator}, std::pair{"series", &series}}) {
      const auto c = poly->coefficients();
      for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero())
          out << name << ',' << i << ',' << c[i].fraction_str() << '\n';
    }
    break;
  }
  case Format::human:
    out << "m = " << o.m << ", weights (a1,a2,a3) = (" << w.str() << "), order " << order << '\n';
    out << "numerator:   " << Poly::monomial(f.numerator_scale, static_cast<std::size_t>(f.numerator_shift))
        << '\n';
    out << "denominator: " << f.denominator << '\n';
    out << "series:      " << series << '\n';
    break;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- reports

void print_report_human(const harness::VerificationReport& report, std::ostream& out) {
  for (const auto& inst : report.instances) {
    out << "m=" << inst.m << " weights=(" << inst.weights.str() << ")";
    if (inst.order)
      out << " order=" << *inst.order;
    out << ": " << (inst.pass() ? "PASS" : "FAIL") << '\n';
    for (const auto& c : inst.checks)
      out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail << '\n';
  }
  out << report.instances.size() << " instances, " << report.failed_instances() << " failed\n";
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string m;
  std::vector<std::string> weights;
  int order = -1;
  std::vector<std::string> oracles;
  unsigned threads = 0;
  bool timing = false;
  FormatOptions format;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const std::vector<int> ms = parse_m_values(o.m);
  std::vector<Weights> weight_sets;
  for (const auto& text : o.weights)
    weight_sets.push_back(parse_weights(text));

  harness::SweepOptions sweep;
  sweep.threads = o.threads;
  if (!o.oracles.empty()) {
    sweep.oracles.clear();
    for (const auto& name : o.oracles) {
      const auto oracle = harness::parse_oracle(name);
      if (!oracle)
        throw UsageError("unknown --oracle '" + name + "' (expected matrix, enumeration or charpoly)");
      sweep.oracles.push_back(*oracle);
    }
  }

  const int max_m = *std::max_element(ms.begin(), ms.end());
  const int order = o.order < 0 ? max_m + 15 : o.order;
  if (order < max_m - 1)
    throw UsageError("--order " + std::to_string(order) + " is below max(m)-1 = " + std::to_string(max_m - 1));

  const auto report = harness::sweep_equivalence(ms, weight_sets, order, sweep);
  switch (o.format.resolve()) {
  case Format::json:
    out << harness::serialize(report, o.timing) << '\n';
    break;
  case Format::csv:
    out << harness::checks_csv(report);
    break;
  case Format::human:
    print_report_human(report, out);
    break;
  }
  return report.pass() ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------- conjecture

struct ConjectureOptions {
  int m_max = 0;
  std::string weights = "1,1,1";
  unsigned threads = 0;
  FormatOptions format;
};

int cmd_conjecture(const ConjectureOptions& o, std::ostream& out) {
  if (o.m_max < 3)
    throw UsageError("--m-max must be at least 3 (got " + std::to_string(o.m_max) + ")");
  const Weights w = parse_weights(o.weights);
  const auto report = harness::sweep_conjecture(o.m_max, w, o.threads);

  switch (o.format.resolve()) {
  case Format::json:
    out << harness::serialize(report) << '\n';
    break;
  case Format::csv:
    out << harness::conjecture_csv(report);
    break;
  case Format::human:
    out << std::setw(4) << "m" << std::setw(11) << "predicted" << std::setw(10) << "observed"
        << "  status\n";
    for (const auto& inst : report.instances) {
      out << std::setw(4) << inst.m << std::setw(11) << inst.conjecture->predicted << std::setw(10)
          << inst.conjecture->observed << "  " << (inst.pass() ? "ok" : "FAIL") << '\n';
      for (const auto& c : inst.checks)
        if (!c.pass)
          out << "      " << c.name << ": " << c.detail << '\n';
    }
    out << report.instances.size() << " rows, " << report.failed_instances() << " failed\n";
    break;
  }
  return report.pass() ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------- roots

struct RootsOptions {
  int m = 0;
  std::string weights;
  double z = 0.0;
  double q = 1.0;
  int terms = 5;
  int series_terms = 13;
  double tolerance = 1e-6;
  FormatOptions format;
};

harness::CheckResult check(std::string name, bool pass, std::string detail) {
  harness::CheckResult c;
  c.name = std::move(name);
  c.pass = pass;
  c.detail = std::move(detail);
  return c;
}

template <typename Fn>
harness::CheckResult guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return check(name, false, std::string("error: ") + e.what());
  }
}

harness::InstanceReport run_roots(const RootsOptions& o, const Weights& w) {
  const SlitSpec spec(o.m);
  harness::InstanceReport inst{o.m, w, std::nullopt, {}, std::nullopt};
  const int m = o.m;

  inst.checks.push_back(guarded("cubic_roots", [&] {
    const auto r = oracles::cubic_roots(o.z, o.q, w);
    const auto f = oracles::characteristic_cubic(o.z, w);
    // Vieta: sum = -b1/b0, pair sum = b2/b0, product = -q/b0.
    const double e1 = std::abs(r.a + r.b + r.c + f.b1 / f.b0) / std::max(1.0, std::abs(f.b1 / f.b0));
    const double e2 =
        std::abs(r.a * r.b + r.b * r.c + r.c * r.a - f.b2 / f.b0) / std::max(1.0, std::abs(f.b2 / f.b0));
    const double e3 = std::abs(r.a * r.b * r.c + o.q / f.b0) / std::abs(o.q / f.b0);
    const double vieta = std::max({e1, e2, e3});
    return check("cubic_roots", vieta <= 1e-10 && r.max_residual <= 1e-10,
                 "a=" + fmt_complex(r.a) + " b=" + fmt_complex(r.b) + " c=" + fmt_complex(r.c) +
                     " vieta=" + fmt_double(vieta) + " residual=" + fmt_double(r.max_residual));
  }));

  double closed = 0.0;
  bool have_closed = false;
  inst.checks.push_back(guarded("closed_form_vs_series", [&] {
    closed = oracles::closed_form_numeric(o.z, o.q, spec, w);
    have_closed = true;
    // The catalytic q marks -1 steps, i.e. a1 -> q a1.
    const Weights wq(w.a1() * BigRat(mpq_class(o.q)), w.a2(), w.a3());
    const int order = m - 1 + o.series_terms - 1;
    const GenFun f = genfun(spec, wq, order);
    std::vector<double> c;
    for (const auto& x : f.series)
      c.push_back(x.to_double());
    const double s = oracles::series_value(c, o.z);
    const double err = std::abs(closed - s);
    const bool ok = std::isfinite(s) && err <= o.tolerance * std::max(1.0, std::abs(closed));
    return check("closed_form_vs_series", ok,
                 "closed=" + fmt_double(closed) + " series(" + std::to_string(o.series_terms) +
                     " terms)=" + fmt_double(s) + " abs_error=" + fmt_double(err) +
                     (ok ? "" : " (series diverges or disagrees at this z)"));
  }));

  inst.checks.push_back(guarded("general_start_vs_closed_form", [&] {
    if (!have_closed)
      return check("general_start_vs_closed_form", false, "closed form unavailable");
    const double g = oracles::general_start_numeric(o.z, o.q, spec.start(), spec, w);
    const double err = std::abs(g - closed);
    const bool ok = err <= 1e-9 * std::abs(closed) || err <= 1e-300;
    return check("general_start_vs_closed_form", ok,
                 "general_start=" + fmt_double(g) + " rel_error=" + fmt_double(err / std::abs(closed)));
  }));

  inst.checks.push_back(guarded("small_root_series", [&] {
    const auto r = oracles::root_series_check(spec, w, o.z, o.terms, o.q);
    std::string detail = "terms " + std::to_string(r.effective_terms) + "/" + std::to_string(r.requested_terms) +
                         " residuals:";
    for (double v : r.residuals)
      detail += " " + fmt_double(v);
    const bool applicable = r.effective_terms >= 2;
    if (!applicable)
      detail += " (not applicable for m=" + std::to_string(m) + ")";
    return check("small_root_series", !applicable || r.monotone, detail);
  }));

  inst.checks.push_back(guarded("large_root_first_order", [&] {
    const auto r = oracles::root_series_check(spec, w, o.z, o.terms, o.q);
    std::string detail = "fitted order " + fmt_double(r.large_root_order) + " residuals:";
    for (double v : r.large_root_residuals)
      detail += " " + fmt_double(v);
    detail += " literal_ratio=" + fmt_double(r.literal_linear_ratio);
    return check("large_root_first_order", r.large_root_pass, detail);
  }));

  inst.checks.push_back(guarded("reduction_identities", [&] {
    const auto r = oracles::reduction_identity_check(oracles::characteristic_cubic(o.z, w), o.q);
    double deriv = 0.0, inv = 0.0;
    for (const auto& ri : r.roots) {
      deriv = std::max(deriv, ri.derivative_error);
      inv = std::max(inv, ri.inverse_derivative_error);
    }
    return check("reduction_identities", r.pass(1e-9, 1e-6),
                 "derivative=" + fmt_double(deriv) + " inverse_derivative=" + fmt_double(inv) +
                     " discriminant=" + fmt_double(r.discriminant_error) +
                     " sign=" + std::to_string(r.discriminant_sign) + " epsilon=" +
                     fmt_double(r.roots[0].epsilon));
  }));
  return inst;
}

int cmd_roots(const RootsOptions& o, std::ostream& out) {
  if (o.m < 2)
    throw UsageError("m must be at least 2 (got " + std::to_string(o.m) + ")");
  if (!(o.z > 0.0))
    throw UsageError("--z must be positive");
  if (o.q == 0.0)
    throw UsageError("--q must be nonzero");
  if (o.terms < 1 || o.series_terms < 1)
    throw UsageError("--terms and --series-terms must be positive");
  const Weights w = parse_weights(o.weights);

  harness::VerificationReport report;
  report.instances.push_back(run_roots(o, w));
  switch (o.format.resolve()) {
  case Format::json:
    out << harness::serialize(report) << '\n';
    break;
  case Format::csv:
    out << harness::checks_csv(report);
    break;
  case Format::human:
    out << "z = " << fmt_double(o.z) << ", q = " << fmt_double(o.q) << '\n';
    print_report_human(report, out);
    break;
  }
  return report.pass() ? kSuccess : kVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"slitpath: absorption generating functions for +2/+1/-1 walks between two barriers"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 verification failure, 2 usage or validation error.\n"
             "Environment: SLITPATH_MAX_ENUM caps the enumeration order (default 30).");

  GfOptions gf;
  auto* gf_cmd = app.add_subcommand("gf", "Denominator and series of the absorption generating function");
  gf_cmd->add_option("--m", gf.m, "Barrier position m (>= 2); the walk starts at m-1")->required();
  gf_cmd->add_option("--weights", gf.weights, "Step weights a1,a2,a3 (integers or p/q)")->required();
  gf_cmd->add_option("--order", gf.order, "Highest series exponent (default m+11)");
  gf_cmd->add_option("--form", gf.form, "Denominator form: general or a2zero")
      ->check(CLI::IsMember({"general", "a2zero"}));
  add_format(gf_cmd, gf.format);
  gf_cmd->footer("CSV columns: part,exponent,coefficient");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the closed form against the exact oracles");
  verify_cmd->add_option("--m", verify.m, "m value, list (2,5,9) or range (2..10)")->required();
  verify_cmd->add_option("--weights", verify.weights, "Weight set a1,a2,a3; repeatable")->required();
  verify_cmd->add_option("--order", verify.order, "Highest series exponent (default max(m)+15)");
  verify_cmd->add_option("--oracle", verify.oracles, "matrix, enumeration or charpoly; repeatable (default all)");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (default: hardware concurrency)");
  verify_cmd->add_flag("--timing", verify.timing, "Include per-check timings in JSON output");
  add_format(verify_cmd, verify.format);
  verify_cmd->footer("CSV columns: m,a1,a2,a3,order,check,pass,detail");

  ConjectureOptions conj;
  auto* conj_cmd = app.add_subcommand("conjecture", "Sweep the minimal term count floor(2(m-1)/3) over m");
  conj_cmd->add_option("--m-max", conj.m_max, "Largest m (>= 3)")->required();
  conj_cmd->add_option("--weights", conj.weights, "Step weights a1,a2,a3 (default 1,1,1)");
  conj_cmd->add_option("--threads", conj.threads, "Worker threads (default: hardware concurrency)");
  add_format(conj_cmd, conj.format);
  conj_cmd->footer("CSV columns: m,predicted,observed");

  RootsOptions roots;
  auto* roots_cmd = app.add_subcommand("roots", "Numeric root, closed-form and identity checks");
  roots_cmd->add_option("--m", roots.m, "Barrier position m (>= 2)")->required();
  roots_cmd->add_option("--weights", roots.weights, "Step weights a1,a2,a3")->required();
  roots_cmd->add_option("--z", roots.z, "Series variable z > 0")->required();
  roots_cmd->add_option("--q", roots.q, "Catalytic variable q (default 1)");
  roots_cmd->add_option("--terms", roots.terms, "Terms of the small-root series (default 5)");
  roots_cmd->add_option("--series-terms", roots.series_terms,
                        "Generating-function coefficients summed against the closed form (default 13)");
  roots_cmd->add_option("--tolerance", roots.tolerance, "Closed form vs series tolerance (default 1e-6)");
  add_format(roots_cmd, roots.format);
  roots_cmd->footer("CSV columns: m,a1,a2,a3,order,check,pass,detail");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    // Subcommand help arrives as CallForHelp on the parent in CLI11; anything
    // else is a usage error.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (app.got_subcommand(gf_cmd))
      return cmd_gf(gf, out);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(verify, out);
    if (app.got_subcommand(conj_cmd))
      return cmd_conjecture(conj, out);
    if (app.got_subcommand(roots_cmd))
      return cmd_roots(roots, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

} // namespace slitpath::cli
