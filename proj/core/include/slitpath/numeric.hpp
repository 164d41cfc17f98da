#pragma once

#include <array>
#include <complex>
#include <vector>

#include "slitpath/weights.hpp"

namespace slitpath::oracles {

using cplx = std::complex<double>;

/// F(x, q) = b0 x^3 + b1 x^2 + b2 x + q.
struct Cubic {
  double b0 = 1.0;
  double b1 = 0.0;
  double b2 = 0.0;

  cplx value(cplx x, double q) const { return ((b0 * x + b1) * x + b2) * x + q; }
  cplx derivative(cplx x) const { return (3.0 * b0 * x + 2.0 * b1) * x + b2; }
  /// Discriminant of F(., q) from its coefficients.
  double discriminant(double q) const;
};

/// The walk's characteristic cubic at (z, w):
/// (a3/a1) x^3 + (a2/a1) x^2 - x/(z a1) + q.
Cubic characteristic_cubic(double z, const Weights& w);

/// Roots of F(., q), Newton-polished. Throws std::runtime_error carrying the
/// residuals if polishing leaves any |F(r)| above 1e-10 of the term scale.
std::array<cplx, 3> solve_cubic(const Cubic& f, double q);

struct QuadRoots {
  cplx r1; ///< (-a2 + sqrt(a2^2 + 4 a3/z)) / (2 a3)
  cplx r2; ///< (-a2 - sqrt(a2^2 + 4 a3/z)) / (2 a3)
};

/// Roots of a3 x^2 + a2 x - 1/z (the large-root skeleton of the cubic).
QuadRoots quad_roots(double z, const Weights& w);

struct CubicRoots {
  cplx a; ///< large root nearest r1
  cplx b; ///< small root, b ≈ a1 z q
  cplx c; ///< large root nearest r2
  double max_residual = 0.0; ///< max |F(root)| / term scale
};

CubicRoots cubic_roots(double z, double q, const Weights& w);

/// Left-absorption generating function from start m-1 evaluated through the
/// roots of the characteristic cubic:
///
///   (a3/(q a1)) (a-b)(b-c)(c-a) / ((b-c) a^-m + (a-b) c^-m + (c-a) b^-m)
///
/// Throws std::domain_error("ill-conditioned root configuration") when two
/// roots nearly coincide.
double closed_form_numeric(double z, double q, const SlitSpec& spec, const Weights& w);

/// Solves the boundary system f(0) = 1, f(m) = f(m+1) = 0 for the coefficients
/// of f(s) = x a^s + y b^s + v c^s and evaluates it at s in 0..m+1.
/// Throws std::domain_error on a singular system.
double general_start_numeric(double z, double q, int s, const SlitSpec& spec, const Weights& w);

/// Value at z of G_n rebuilt from the cos/arccos form with complex arithmetic:
/// (a1^2 a3)^(n/2) z^(3n/2) [cos(nπ/2) C(M,n/2)^2
///   + 2 Σ_u i^(5n) C(M,u) C(M,n-u) cos((2u-n) arccos(i a2 sqrt(z) / (2 sqrt(a3))))].
cplx g_term_numeric(int n, const SlitSpec& spec, const Weights& w, double z);

/// Σ_n c_n z^n by Horner's rule.
double series_value(const std::vector<double>& coefficients, double z);

/// Per-root outcome of the inverse-derivative identities.
struct RootIdentity {
  cplx root;
  cplx derivative;          ///< F'(r)
  cplx difference_product;  ///< b0 Π_{j≠i} (r - r_j)
  double derivative_error = 0.0; ///< relative |F'(r) - b0 Π| / |F'(r)|
  cplx root_dq;             ///< dr/dq by central differences
  double inverse_derivative_error = 0.0; ///< |dr/dq F'(r) + dF/dq| relative to |dF/dq|
  double epsilon = 0.0;     ///< sign linking r^m/(b0 Π) to r^m dr/dq; -1 when dF/dq = 1
};

struct ReductionReport {
  std::array<RootIdentity, 3> roots;
  double discriminant = 0.0;     ///< from coefficients
  cplx vandermonde;              ///< (a-b)(b-c)(c-a), roots in solver order
  double discriminant_error = 0.0; ///< relative |D - b0^4 V^2|
  int discriminant_sign = 0;     ///< b0^-2 sqrt(D) = sign * V
  double step = 0.0;             ///< finite-difference step in q

  bool pass(double identity_tol = 1e-9, double fd_tol = 1e-6) const;
};

/// Checks F'(r_i) = b0 Π_{j≠i}(r_i - r_j), dr_i/dq F'(r_i) = -dF/dq and
/// b0^-2 sqrt(D) = ±(a-b)(b-c)(c-a). Throws std::domain_error
/// ("discriminant vanishes") for repeated roots.
ReductionReport reduction_identity_check(const Cubic& f, double q);

struct RootSeriesReport {
  cplx small_root;
  cplx exact_power;                 ///< b^(1-m)
  int requested_terms = 0;
  int effective_terms = 0;          ///< min(requested, m-2)
  std::vector<double> residuals;    ///< relative error after 1..effective terms
  bool monotone = false;            ///< strictly decreasing residuals

  std::vector<double> large_root_q;         ///< q samples for the first-order check
  std::vector<double> large_root_residuals; ///< max over both large roots
  double large_root_order = 0.0;            ///< fitted exponent p in residual ~ q^p
  double literal_linear_ratio = 0.0;        ///< residual / |linear term| without the -a1/a3 factor
  bool large_root_pass = false;             ///< 1.8 <= p <= 2.2
};

/// Compares the truncated series
///   b^(1-m) ≈ (a1 z q)^(1-m) (1 + (1-m) Σ_n G_n(z) q^n / (n-m+1))
/// with the numerically solved small root, and the first-order-in-q
/// expansions of the two large roots about the quadratic roots.
RootSeriesReport root_series_check(const SlitSpec& spec, const Weights& w, double z, int terms, double q = 1.0);

} // namespace slitpath::oracles
