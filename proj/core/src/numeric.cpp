#include "slitpath/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "slitpath/binomial.hpp"
#include "slitpath/genfun.hpp"

namespace slitpath::oracles {

namespace {

double term_scale(const Cubic& f, double q, cplx x) {
  const double ax = std::abs(x);
  return std::abs(f.b0) * ax * ax * ax + std::abs(f.b1) * ax * ax + std::abs(f.b2) * ax + std::abs(q);
}

cplx polish(const Cubic& f, double q, cplx x) {
  for (int it = 0; it < 50; ++it) {
    const cplx d = f.derivative(x);
    if (d == 0.0)
      break;
    const cplx step = f.value(x, q) / d;
    const cplx next = x - step;
    if (std::abs(f.value(next, q)) >= std::abs(f.value(x, q)) && it > 3)
      break;
    x = next;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x))
      break;
  }
  return x;
}

double min_separation(const std::array<cplx, 3>& r) {
  return std::min({std::abs(r[0] - r[1]), std::abs(r[1] - r[2]), std::abs(r[2] - r[0])});
}

double max_modulus(const std::array<cplx, 3>& r) {
  return std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
}

} // namespace

double Cubic::discriminant(double q) const {
  const double a = b0, b = b1, c = b2, d = q;
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

Cubic characteristic_cubic(double z, const Weights& w) {
  const double a1 = w.a1().to_double();
  return Cubic{w.a3().to_double() / a1, w.a2().to_double() / a1, -1.0 / (z * a1)};
}

std::array<cplx, 3> solve_cubic(const Cubic& f, double q) {
  if (f.b0 == 0.0)
    throw std::invalid_argument("leading coefficient is zero");

  // Closed form on the general cubic, then Newton polish.
  const cplx a = f.b0, b = f.b1, c = f.b2, d = q;
  const cplx d0 = b * b - 3.0 * a * c;
  const cplx d1 = 2.0 * b * b * b - 9.0 * a * b * c + 27.0 * a * a * d;
  const cplx disc = std::sqrt(d1 * d1 - 4.0 * d0 * d0 * d0);
  cplx inner = (d1 + disc) / 2.0;
  if (std::abs((d1 - disc) / 2.0) > std::abs(inner))
    inner = (d1 - disc) / 2.0;

  std::array<cplx, 3> roots;
  if (std::abs(inner) == 0.0) {
    roots.fill(-b / (3.0 * a));
  } else {
    const cplx cc = std::pow(inner, 1.0 / 3.0);
    const cplx xi(-0.5, std::sqrt(3.0) / 2.0);
    cplx rot = 1.0;
    for (auto& r : roots) {
      const cplx ck = rot * cc;
      r = -(b + ck + d0 / ck) / (3.0 * a);
      rot *= xi;
    }
  }

  double worst = 0.0;
  for (auto& r : roots) {
    r = polish(f, q, r);
    worst = std::max(worst, std::abs(f.value(r, q)) / term_scale(f, q, r));
  }
  if (worst > 1e-10) {
    std::ostringstream msg;
    msg << "cubic root finder did not converge; residuals:";
    for (const auto& r : roots)
      msg << ' ' << std::abs(f.value(r, q)) / term_scale(f, q, r);
    throw std::runtime_error(msg.str());
  }
  return roots;
}

QuadRoots quad_roots(double z, const Weights& w) {
  const double a2 = w.a2().to_double();
  const double a3 = w.a3().to_double();
  const cplx root = std::sqrt(cplx(a2 * a2 + 4.0 * a3 / z));
  return {(-a2 + root) / (2.0 * a3), (-a2 - root) / (2.0 * a3)};
}

CubicRoots cubic_roots(double z, double q, const Weights& w) {
  const Cubic f = characteristic_cubic(z, w);
  std::array<cplx, 3> r = solve_cubic(f, q);

  const cplx small_guess = w.a1().to_double() * z * q;
  auto by_distance = [](cplx target) {
    return [target](cplx x, cplx y) { return std::abs(x - target) < std::abs(y - target); };
  };
  std::sort(r.begin(), r.end(), by_distance(small_guess));
  const QuadRoots big = quad_roots(z, w);

  CubicRoots out;
  out.b = r[0];
  if (std::abs(r[1] - big.r1) + std::abs(r[2] - big.r2) <= std::abs(r[2] - big.r1) + std::abs(r[1] - big.r2)) {
    out.a = r[1];
    out.c = r[2];
  } else {
    out.a = r[2];
    out.c = r[1];
  }
  for (const cplx x : {out.a, out.b, out.c})
    out.max_residual = std::max(out.max_residual, std::abs(f.value(x, q)) / term_scale(f, q, x));
  return out;
}

double closed_form_numeric(double z, double q, const SlitSpec& spec, const Weights& w) {
  const CubicRoots roots = cubic_roots(z, q, w);
  const cplx a = roots.a, b = roots.b, c = roots.c;
  const std::array<cplx, 3> all{a, b, c};
  if (min_separation(all) <= 1e-8 * max_modulus(all))
    throw std::domain_error("ill-conditioned root configuration");

  const double m = spec.m();
  const double prefactor = w.a3().to_double() / (q * w.a1().to_double());
  const cplx num = (a - b) * (b - c) * (c - a);
  const cplx den = (b - c) * std::pow(a, -m) + (a - b) * std::pow(c, -m) + (c - a) * std::pow(b, -m);
  if (den == 0.0)
    throw std::domain_error("ill-conditioned root configuration");
  return (prefactor * num / den).real();
}

double general_start_numeric(double z, double q, int s, const SlitSpec& spec, const Weights& w) {
  const int m = spec.m();
  if (s < 0 || s > m + 1)
    throw std::out_of_range("start state " + std::to_string(s) + " outside 0..m+1");

  const CubicRoots roots = cubic_roots(z, q, w);
  const std::array<cplx, 3> r{roots.a, roots.b, roots.c};

  // Rows: f(0) = 1, f(m) = 0, f(m+1) = 0.
  std::array<std::array<cplx, 4>, 3> sys{};
  for (int j = 0; j < 3; ++j) {
    sys[0][j] = 1.0;
    sys[1][j] = std::pow(r[j], m);
    sys[2][j] = std::pow(r[j], m + 1);
  }
  sys[0][3] = 1.0;

  // Gaussian elimination with partial pivoting; columns scaled so the large
  // roots do not swamp the pivot test.
  std::array<double, 3> col_scale{};
  for (int j = 0; j < 3; ++j)
    col_scale[j] = std::max({std::abs(sys[0][j]), std::abs(sys[1][j]), std::abs(sys[2][j])});
  for (int row = 0; row < 3; ++row)
    for (int j = 0; j < 3; ++j)
      sys[row][j] /= col_scale[j];

  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row)
      if (std::abs(sys[row][col]) > std::abs(sys[pivot][col]))
        pivot = row;
    if (std::abs(sys[pivot][col]) < 1e-13)
      throw std::domain_error("singular boundary system");
    std::swap(sys[pivot], sys[col]);
    for (int row = 0; row < 3; ++row) {
      if (row == col)
        continue;
      const cplx factor = sys[row][col] / sys[col][col];
      for (int k = col; k < 4; ++k)
        sys[row][k] -= factor * sys[col][k];
    }
  }

  cplx value = 0.0;
  for (int j = 0; j < 3; ++j) {
    const cplx coefficient = sys[j][3] / sys[j][j] / col_scale[j];
    value += coefficient * std::pow(r[j], s);
  }
  return value.real();
}

cplx g_term_numeric(int n, const SlitSpec& spec, const Weights& w, double z) {
  const int m = spec.m();
  if (n < 1 || n > m - 1)
    throw std::out_of_range("term index out of range");

  const double a1 = w.a1().to_double();
  const double a2 = w.a2().to_double();
  const double a3 = w.a3().to_double();
  const long top = m - 1 - n;
  const double pi = std::numbers::pi;

  cplx g = 0.0;
  if (n % 2 == 0) {
    const double b = binom(top, static_cast<unsigned long>(n / 2)).to_double();
    g += std::cos(n * pi / 2.0) * b * b;
  }
  const cplx phase = std::exp(cplx(0.0, pi * 5.0 * n / 2.0));
  const cplx arg = cplx(0.0, a2 * std::sqrt(z) / (2.0 * std::sqrt(a3)));
  const cplx theta = std::acos(arg);
  for (int u = 0; u <= (n - 1) / 2; ++u) {
    const double bb = (binom(top, static_cast<unsigned long>(u)) * binom(top, static_cast<unsigned long>(n - u))).to_double();
    g += 2.0 * phase * bb * std::cos(static_cast<double>(2 * u - n) * theta);
  }
  return std::pow(a1 * a1 * a3, n / 2.0) * std::pow(z, 1.5 * n) * g;
}

double series_value(const std::vector<double>& coefficients, double z) {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

bool ReductionReport::pass(double identity_tol, double fd_tol) const {
  for (const auto& r : roots)
    if (!(r.derivative_error <= identity_tol) || !(r.inverse_derivative_error <= fd_tol))
      return false;
  return discriminant_error <= identity_tol && discriminant_sign != 0;
}

ReductionReport reduction_identity_check(const Cubic& f, double q) {
  const std::array<cplx, 3> r = solve_cubic(f, q);
  const double D = f.discriminant(q);
  if (D == 0.0 || min_separation(r) <= 1e-7 * std::max(1.0, max_modulus(r)))
    throw std::domain_error("discriminant vanishes");

  ReductionReport report;
  report.discriminant = D;
  report.step = 1e-6 * std::max(1.0, std::abs(q));
  const std::array<cplx, 3> up = solve_cubic(f, q + report.step);
  const std::array<cplx, 3> down = solve_cubic(f, q - report.step);
  auto nearest = [](const std::array<cplx, 3>& set, cplx x) {
    return *std::min_element(set.begin(), set.end(),
                             [x](cplx p, cplx s) { return std::abs(p - x) < std::abs(s - x); });
  };

  for (int i = 0; i < 3; ++i) {
    RootIdentity& out = report.roots[static_cast<std::size_t>(i)];
    out.root = r[static_cast<std::size_t>(i)];
    out.derivative = f.derivative(out.root);
    out.difference_product = f.b0;
    for (int j = 0; j < 3; ++j)
      if (j != i)
        out.difference_product *= out.root - r[static_cast<std::size_t>(j)];
    out.derivative_error = std::abs(out.derivative - out.difference_product) / std::abs(out.derivative);

    out.root_dq = (nearest(up, out.root) - nearest(down, out.root)) / (2.0 * report.step);
    // dF/dq = 1 for F(x, q) = ... + q.
    const cplx product = out.root_dq * out.derivative;
    out.inverse_derivative_error = std::abs(product + 1.0);
    out.epsilon = product.real() < 0 ? -1.0 : 1.0;
  }

  report.vandermonde = (r[0] - r[1]) * (r[1] - r[2]) * (r[2] - r[0]);
  const cplx b0sq = f.b0 * f.b0;
  const cplx predicted = b0sq * b0sq * report.vandermonde * report.vandermonde;
  report.discriminant_error = std::abs(cplx(D) - predicted) / std::max(std::abs(D), std::abs(predicted));

  const cplx root_d = std::sqrt(cplx(D)) / b0sq;
  const double plus = std::abs(root_d - report.vandermonde);
  const double minus = std::abs(root_d + report.vandermonde);
  report.discriminant_sign = plus <= minus ? 1 : -1;
  return report;
}

RootSeriesReport root_series_check(const SlitSpec& spec, const Weights& w, double z, int terms, double q) {
  const int m = spec.m();
  const double a1 = w.a1().to_double();
  const double a3 = w.a3().to_double();

  RootSeriesReport report;
  report.requested_terms = terms;
  report.effective_terms = std::max(0, std::min(terms, m - 2));

  const CubicRoots roots = cubic_roots(z, q, w);
  report.small_root = roots.b;
  report.exact_power = std::pow(roots.b, 1.0 - m);

  const double lead = std::pow(a1 * z * q, 1.0 - m);
  double sum = 0.0;
  for (int n = 1; n <= report.effective_terms; ++n) {
    sum += g_term(n, spec, w).evaluate(z) * std::pow(q, n) / static_cast<double>(n - m + 1);
    const double approx = lead * (1.0 + (1.0 - m) * sum);
    report.residuals.push_back(std::abs(approx - report.exact_power) / std::abs(report.exact_power));
  }
  report.monotone = !report.residuals.empty();
  for (std::size_t i = 1; i < report.residuals.size(); ++i)
    if (!(report.residuals[i] < report.residuals[i - 1]))
      report.monotone = false;

  // Large roots to first order in q around the quadratic roots.
  const QuadRoots quad = quad_roots(z, w);
  report.large_root_q = {1e-2, 1e-3, 1e-4};
  for (const double qs : report.large_root_q) {
    const CubicRoots rs = cubic_roots(z, qs, w);
    double worst = 0.0;
    double literal = 0.0;
    for (const auto& [root, base, other] : {std::tuple{rs.a, quad.r1, quad.r2}, std::tuple{rs.c, quad.r2, quad.r1}}) {
      const cplx linear = (1.0 - m) * std::pow(base, -m - 1.0) * qs / (base - other);
      const cplx corrected = std::pow(base, 1.0 - m) + linear * (-a1 / a3);
      const cplx exact = std::pow(root, 1.0 - m);
      worst = std::max(worst, std::abs(exact - corrected) / std::abs(std::pow(base, 1.0 - m)));
      literal = std::max(literal, std::abs(exact - (std::pow(base, 1.0 - m) + linear)) / std::abs(linear));
    }
    report.large_root_residuals.push_back(worst);
    report.literal_linear_ratio = literal;
  }
  const auto& res = report.large_root_residuals;
  const auto& qv = report.large_root_q;
  double order_sum = 0.0;
  for (std::size_t i = 1; i < res.size(); ++i)
    order_sum += std::log(res[i - 1] / res[i]) / std::log(qv[i - 1] / qv[i]);
  report.large_root_order = order_sum / static_cast<double>(res.size() - 1);
  report.large_root_pass = report.large_root_order >= 1.8 && report.large_root_order <= 2.2;
  return report;
}

} // namespace slitpath::oracles
