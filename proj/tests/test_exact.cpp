// SPDX-License-Identifier: Apache-2.0
#include <gmpxx.h>
#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "poincare/exact/dyadic.hpp"
#include "poincare/exact/qsqrt2.hpp"
#include "poincare/exact/rational.hpp"

using namespace poincare;

namespace {

// Numeric value of p + q*sqrt2 with 512-bit floats.
mpf_class approx(const QSqrt2& x) {
  mpf_class p(x.p().raw(), 512), q(x.q().raw(), 512), two(2, 512);
  mpf_class root(0, 512);
  mpf_sqrt(root.get_mpf_t(), two.get_mpf_t());
  return p + q * root;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(r, Rational(-3, 4));
  EXPECT_EQ(r.str(), "-3/4");
  EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("3/2^3"), Rational(3, 8));
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(min(Rational(1, 3), Rational(1, 2)), Rational(1, 3));
  EXPECT_EQ(max(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(abs(Rational(-2, 5)), Rational(2, 5));
}

TEST(QSqrt2, ThetaComponents) {
  EXPECT_EQ(theta().p(), Rational(1, 4));
  EXPECT_EQ(theta().q(), Rational(1, 8));
}

TEST(QSqrt2, CompareExamples) {
  // 8*(7/16) - 2 = 3/2 and (3/2)^2 = 9/4 >= 2.
  EXPECT_EQ(qsqrt2_cmp(QSqrt2(Rational(7, 16)), theta()), std::strong_ordering::greater);
  EXPECT_EQ(qsqrt2_cmp(theta(), theta()), std::strong_ordering::equal);
  // (8*27/64 - 2)^2 = 121/64 < 2.
  EXPECT_EQ(qsqrt2_cmp(QSqrt2(Rational(27, 64)), theta()), std::strong_ordering::less);
  EXPECT_EQ(qsqrt2_cmp(QSqrt2(Rational(3, 8)), theta()), std::strong_ordering::less);
  // 437/1024: 8*437/1024 - 2 = 45/128, (45/128)^2 < 2.
  EXPECT_EQ(qsqrt2_cmp(QSqrt2(Rational(437, 1024)), theta()), std::strong_ordering::less);
  EXPECT_EQ(qsqrt2_cmp(QSqrt2(Rational(55, 128)), theta()), std::strong_ordering::greater);
}

TEST(QSqrt2, SignBranches) {
  EXPECT_EQ(QSqrt2(Rational(1), Rational(1)).sign(), 1);
  EXPECT_EQ(QSqrt2(Rational(-1), Rational(-1)).sign(), -1);
  EXPECT_EQ(QSqrt2(Rational(-1), Rational(1)).sign(), 1);
  EXPECT_EQ(QSqrt2(Rational(2), Rational(-1)).sign(), 1);
  EXPECT_EQ(QSqrt2(Rational(-2), Rational(1)).sign(), -1);
  EXPECT_EQ(QSqrt2(Rational(0), Rational(0)).sign(), 0);
}

TEST(QSqrt2, ParseAndPrint) {
  EXPECT_EQ(theta().str(), "1/4 + 1/8*sqrt2");
  EXPECT_EQ(QSqrt2::parse("1/4 + 1/8*sqrt2"), theta());
  EXPECT_EQ(QSqrt2::parse("1/2 - 3*sqrt2"), QSqrt2(Rational(1, 2), Rational(-3)));
  EXPECT_EQ(QSqrt2::parse("-2*sqrt2"), QSqrt2(Rational(0), Rational(-2)));
  EXPECT_EQ(QSqrt2::parse("5/7"), QSqrt2(Rational(5, 7)));
  EXPECT_EQ(QSqrt2::parse(QSqrt2(Rational(1, 2), Rational(-3)).str()), QSqrt2(Rational(1, 2), Rational(-3)));
  EXPECT_THROW(QSqrt2::parse("sqrt3"), std::invalid_argument);
}

TEST(QSqrt2, CompareAgreesWithHighPrecision) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-200, 200), den(1, 64);
  for (int k = 0; k < 1000; ++k) {
    const QSqrt2 x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    const QSqrt2 y(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    const auto c = qsqrt2_cmp(x, y);
    if (x == y) {
      EXPECT_EQ(c, std::strong_ordering::equal);
      continue;
    }
    // Distinct elements differ by far more than the float error.
    const int s = cmp(approx(x), approx(y));
    EXPECT_EQ(c, s < 0 ? std::strong_ordering::less : std::strong_ordering::greater) << x << " vs " << y;
  }
}

TEST(QSqrt2, ThetaBounds) {
  EXPECT_EQ(qsqrt2_cmp(QSqrt2(Rational(27, 64)), theta()), std::strong_ordering::less);
  EXPECT_EQ(qsqrt2_cmp(theta(), QSqrt2(Rational(7, 16))), std::strong_ordering::less);
  EXPECT_NE(qsqrt2_cmp(QSqrt2(Rational(3, 8)), theta()), std::strong_ordering::greater);
}

TEST(Dyadic, Canonical) {
  const Dyadic d(6, 3);
  EXPECT_EQ(d.a(), 3);
  EXPECT_EQ(d.n(), 2);
  EXPECT_EQ(d.str(), "3/2^2");
  EXPECT_EQ(Dyadic(8, 3), Dyadic::one());
  EXPECT_EQ(Dyadic(0, 5), Dyadic::zero());
  EXPECT_EQ(Dyadic::one().str(), "1");
  EXPECT_THROW(Dyadic(9, 3), std::domain_error);
  EXPECT_THROW(Dyadic(-1, 3), std::domain_error);
}

TEST(Dyadic, ParseAndConvert) {
  EXPECT_EQ(Dyadic::parse("3/2^2"), Dyadic(3, 2));
  EXPECT_EQ(Dyadic::parse("3/4"), Dyadic(3, 2));
  EXPECT_THROW(Dyadic::parse("1/3"), std::invalid_argument);
  EXPECT_EQ(Dyadic::from_rational(Rational(5, 8)), Dyadic(5, 3));
  EXPECT_FALSE(Dyadic::from_rational(Rational(1, 3)).has_value());
  EXPECT_FALSE(Dyadic::from_rational(Rational(3, 2)).has_value());
}

TEST(Dyadic, OperationExamples) {
  EXPECT_EQ(dyadic_bullet(Dyadic::half(), Dyadic::half()), Dyadic(1, 2));
  EXPECT_EQ(dyadic_oplus(Dyadic::one(), Dyadic(1, 3)), Dyadic::one());
  EXPECT_EQ(dyadic_odot(Dyadic(3, 2), Dyadic(3, 2)), Dyadic::half());
  EXPECT_EQ(dyadic_neg(Dyadic(3, 3)), Dyadic(5, 3));
}

TEST(Dyadic, NilpotencyExamples) {
  EXPECT_EQ(nilpotency_index(Dyadic(3, 2)), mpz_class(4));
  EXPECT_EQ(nilpotency_index(Dyadic::zero()), mpz_class(1));
  EXPECT_FALSE(nilpotency_index(Dyadic::one()).has_value());
}

TEST(Dyadic, LawsExhaustiveOverSixtyFourths) {
  const auto slice = dyadic_slice(6);
  ASSERT_EQ(slice.size(), 65u);
  for (const auto& x : slice) {
    EXPECT_EQ(dyadic_neg(dyadic_neg(x)), x);
    EXPECT_TRUE(dyadic_odot(x, dyadic_neg(x)).is_zero());
    for (const auto& y : slice) {
      EXPECT_EQ(dyadic_oplus(x, y), dyadic_oplus(y, x));
      const Rational sum = min(Rational(1), x.to_rational() + y.to_rational());
      EXPECT_EQ(dyadic_oplus(x, y).to_rational(), sum);
      EXPECT_EQ(dyadic_bullet(x, y).to_rational(), x.to_rational() * y.to_rational());
    }
  }
  for (std::size_t i = 0; i < slice.size(); i += 3)
    for (const auto& y : slice)
      for (const auto& z : slice)
        EXPECT_EQ(dyadic_oplus(dyadic_oplus(slice[i], y), z), dyadic_oplus(slice[i], dyadic_oplus(y, z)));
}

TEST(Dyadic, NilpotentPowersReachZero) {
  for (const auto& x : dyadic_slice(6)) {
    const auto k = nilpotency_index(x);
    if (x.is_one()) {
      EXPECT_FALSE(k.has_value());
      continue;
    }
    ASSERT_TRUE(k.has_value());
    const long steps = k->get_si();
    Dyadic power = x;
    for (long j = 1; j < steps; ++j) {
      EXPECT_FALSE(power.is_zero()) << x << " at power " << j;
      power = dyadic_odot(power, x);
    }
    EXPECT_TRUE(power.is_zero()) << x;
  }
}

TEST(Dyadic, OdotMatchesFractionLaw) {
  for (unsigned long n = 0; n <= 5; ++n)
    for (unsigned long m = 0; m <= n; ++m)
      for (long a = 0; a <= (1L << n); ++a)
        for (long b = 0; b <= (1L << m); ++b) {
          const long c = std::max(0L, a + b * (1L << (n - m)) - (1L << n));
          EXPECT_EQ(dyadic_odot(Dyadic(a, n), Dyadic(b, m)), Dyadic(c, n));
        }
}
