#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "slitpath/bigrat.hpp"
#include "slitpath/binomial.hpp"
#include "slitpath/chebyshev.hpp"
#include "slitpath/poly.hpp"
#include "slitpath/series.hpp"
#include "test_support.hpp"

namespace slitpath {
namespace {

TEST(BigRat, CanonicalForm) {
  const BigRat r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(BigRat(0, -5).fraction_str(), "0/1");
  EXPECT_EQ(BigRat(21).fraction_str(), "21/1");
  EXPECT_EQ(BigRat(21).str(), "21");
}

TEST(BigRat, Parse) {
  EXPECT_EQ(BigRat::parse("1/2"), BigRat(1, 2));
  EXPECT_EQ(BigRat::parse("-3"), BigRat(-3));
  EXPECT_EQ(BigRat::parse(" 4/6 "), BigRat(2, 3));
  EXPECT_EQ(BigRat::parse("4/-6"), BigRat(-2, 3));
  EXPECT_EQ(BigRat::parse("+7"), BigRat(7));
  EXPECT_EQ(BigRat::parse("123456789012345678901234567890/3").str(), "41152263004115226300411522630");
  EXPECT_THROW(BigRat::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(BigRat::parse("abc"), std::invalid_argument);
  EXPECT_THROW(BigRat::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(BigRat::parse(""), std::invalid_argument);
}

TEST(BigRat, ArithmeticAndOrdering) {
  EXPECT_EQ(BigRat(1, 2) + BigRat(1, 3), BigRat(5, 6));
  EXPECT_EQ(BigRat(1, 2) * BigRat(2, 3), BigRat(1, 3));
  EXPECT_EQ(BigRat(2, 3).pow(3), BigRat(8, 27));
  EXPECT_EQ(BigRat(-1, 2).pow(0), BigRat(1));
  EXPECT_LT(BigRat(1, 3), BigRat(1, 2));
  EXPECT_GT(BigRat(-1, 3), BigRat(-1, 2));
  EXPECT_THROW(BigRat(1) / BigRat(0), std::domain_error);
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binom(5, 3), BigRat(10));
  EXPECT_EQ(binom(-2, 3), BigRat(-4));
  EXPECT_EQ(binom(7, 0), BigRat(1));
  EXPECT_EQ(binom(-3, 0), BigRat(1));
  EXPECT_EQ(binom(3, 5), BigRat(0));
  EXPECT_EQ(binom(-3, 1), BigRat(-3));
}

TEST(Binomial, MatchesFallingFactorial) {
  for (long top = -20; top <= 20; ++top)
    for (unsigned long k = 0; k <= 12; ++k) {
      BigRat expected(1);
      for (unsigned long i = 0; i < k; ++i)
        expected *= BigRat(top - static_cast<long>(i));
      for (unsigned long i = 1; i <= k; ++i)
        expected /= BigRat(static_cast<long>(i));
      EXPECT_EQ(binom(top, k), expected) << top << " choose " << k;
    }
}

TEST(Binomial, PascalRule) {
  for (long top = -20; top <= 20; ++top)
    for (unsigned long k = 1; k <= 20; ++k)
      EXPECT_EQ(binom(top, k), binom(top - 1, k - 1) + binom(top - 1, k)) << top << " choose " << k;
}

TEST(ChebV, SmallOrders) {
  const ChebV& v0 = cheb_v(0);
  ASSERT_EQ(v0.coefficients.size(), 1u);
  EXPECT_EQ(v0.coefficients[0], 1);

  const ChebV& v3 = cheb_v(3);
  ASSERT_EQ(v3.coefficients.size(), 2u);
  EXPECT_EQ(v3.coefficients[0], 4);
  EXPECT_EQ(v3.coefficients[1], 3);

  const ChebV& v4 = cheb_v(4);
  ASSERT_EQ(v4.coefficients.size(), 3u);
  EXPECT_EQ(v4.coefficients[0], 8);
  EXPECT_EQ(v4.coefficients[1], 8);
  EXPECT_EQ(v4.coefficients[2], 1);
}

TEST(ChebV, TableInvariants) {
  for (unsigned k = 1; k <= 40; ++k) {
    const ChebV& v = cheb_v(k);
    EXPECT_EQ(v.order, k);
    ASSERT_EQ(v.coefficients.size(), k / 2 + 1);
    EXPECT_EQ(v.coefficients[0], mpz_class(1) << (k - 1));
    for (const auto& t : v.coefficients)
      EXPECT_GT(t, 0);
  }
  // V_{k+1} = 2y V_k + V_{k-1}, coefficient by coefficient.
  for (unsigned k = 1; k < 40; ++k) {
    const auto& next = cheb_v(k + 1).coefficients;
    const auto& cur = cheb_v(k).coefficients;
    const auto& prev = cheb_v(k - 1).coefficients;
    for (std::size_t j = 0; j < next.size(); ++j) {
      mpz_class expected = j < cur.size() ? mpz_class(2 * cur[j]) : mpz_class(0);
      if (j >= 1 && j - 1 < prev.size())
        expected += prev[j - 1];
      EXPECT_EQ(next[j], expected) << "k=" << k + 1 << " j=" << j;
    }
  }
}

TEST(ChebV, ImaginaryArgumentIdentity) {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 100; ++trial) {
    const double y = testing::random_rational(rng, 9, 11).to_double();
    for (unsigned k = 0; k <= 32; ++k) {
      const std::complex<double> iy(0.0, y);
      const std::complex<double> tk = std::cos(static_cast<double>(k) * std::acos(iy));
      const std::complex<double> expected = std::pow(std::complex<double>(0.0, 1.0), static_cast<int>(k)) *
                                            cheb_v(k).evaluate(std::complex<double>(y, 0.0));
      EXPECT_LE(std::abs(tk - expected), 1e-10 * std::max(1.0, std::abs(expected)))
          << "k=" << k << " y=" << y;
    }
  }
}

TEST(Poly, Examples) {
  const Poly one_plus_z{1, 1};
  const Poly one_minus_z{1, -1};
  EXPECT_EQ(one_plus_z * one_minus_z, (Poly{1, 0, -1}));
  EXPECT_TRUE((one_plus_z * Poly{}).is_zero());
  EXPECT_EQ((Poly{1, 2}) * (Poly{3, 1}), (Poly{3, 7, 2}));
  EXPECT_EQ(Poly{}.degree(), -1);
  EXPECT_EQ((Poly{1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ((Poly{1, 1} + Poly{0, -1}), Poly{1});
}

TEST(Poly, Formatting) {
  EXPECT_EQ((Poly{1, 0, -21, -12}).to_string(), "1 - 21z^2 - 12z^3");
  EXPECT_EQ((Poly{0, 1}).to_string(), "z");
  EXPECT_EQ((Poly{0, BigRat(-1, 2)}).to_string(), "-(1/2)z");
  EXPECT_EQ(Poly{}.to_string(), "0");
}

TEST(Poly, LowDegreeAndTruncation) {
  const Poly p{0, 0, 3, 0, 5};
  EXPECT_EQ(p.low_degree(), 2u);
  EXPECT_EQ(p.truncated(3), (Poly{0, 0, 3}));
  EXPECT_EQ(p.truncated(10), p);
  EXPECT_FALSE(Poly{}.low_degree().has_value());
}

TEST(Poly, RingAxioms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly a = testing::random_poly(rng, 6);
    const Poly b = testing::random_poly(rng, 6);
    const Poly c = testing::random_poly(rng, 6);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    if (!a.is_zero() && !b.is_zero())
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(SeriesInverse, Examples) {
  const Series geometric = series_inverse(Poly{1, -1}, 4);
  EXPECT_EQ(geometric, Series(5, BigRat(1)));

  const Series identity = series_inverse(Poly{1}, 2);
  EXPECT_EQ(identity, (Series{1, 0, 0}));

  EXPECT_THROW(series_inverse(Poly{0, 1}, 3), std::domain_error);
  EXPECT_THROW(series_inverse(Poly{}, 3), std::domain_error);
}

TEST(SeriesInverse, GoldenDenominator) {
  const Poly d{1, 0, -21, -12, 135, 120, -246, -216, 45};
  const Series inv = series_inverse(d, 12);
  // Multiplied by z^8 these are the coefficients of z^8..z^20.
  const Series expected{1, 0, 21, 12, 306, 384, 3981, 7812, 50580, 130752, 649332, 1980432, 8487756};
  EXPECT_EQ(inv, expected);
}

TEST(SeriesInverse, ProductIsOne) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> order(0, 40);
  for (int trial = 0; trial < 50; ++trial) {
    Poly d = testing::random_poly(rng, 10);
    if (d.coeff(0).is_zero())
      d += Poly{BigRat(3, 2)};
    const auto n = static_cast<std::size_t>(order(rng));
    const Series inv = series_inverse(d, n);
    ASSERT_EQ(inv.size(), n + 1);

    Series dseries(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      dseries[i] = d.coeff(i);
    Series expected(n + 1);
    expected[0] = 1;
    EXPECT_EQ(series_mul(dseries, inv), expected);
  }
}

} // namespace
} // namespace slitpath
