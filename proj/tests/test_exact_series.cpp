#include <gtest/gtest.h>

#include <random>

#include "superpat/exact_series.hpp"
#include "superpat/waiting_time.hpp"

using namespace superpat;

namespace {

BigRational R(long p, long q = 1) { return make_rational(p, q); }

Polynomial random_poly(std::mt19937& rng, int max_degree, bool nonzero_constant) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<BigRational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = R(coef(rng), den(rng));
  if (nonzero_constant && c[0] == 0) c[0] = 1;
  return Polynomial(c);
}

}  // namespace

TEST(BigRational, CanonicalFormAndRendering) {
  EXPECT_EQ(to_string(R(0, 5)), "0/1");
  EXPECT_EQ(to_string(R(6, -4)), "-3/2");
  EXPECT_EQ(to_string(R(217, 16)), "217/16");
  EXPECT_EQ(to_decimal(R(217, 16)), "13.5625");
  EXPECT_EQ(to_decimal(R(5)), "5");
  EXPECT_EQ(to_decimal(R(2, 3), 4), "0.6667");
  EXPECT_EQ(to_decimal(R(-1, 8), 2), "-0.13");
  EXPECT_EQ(to_decimal(R(42, 2187)), "0.019204389575");
  EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(BigRational, FieldLawsOnSamples) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  for (int i = 0; i < 300; ++i) {
    const auto a = R(num(rng), den(rng)), b = R(num(rng), den(rng)), c = R(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    const auto back = (a + b) - b;
    EXPECT_EQ(back, a);
    EXPECT_EQ(to_string(back), to_string(a));
    EXPECT_GT(denominator_of(back), 0);
  }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 3), 10);
  EXPECT_EQ(binomial(9, 0), 1);
  EXPECT_EQ(binomial(6, 5), 6);
  EXPECT_EQ(binomial(4, 7), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  for (int n = 1; n < 40; ++n)
    for (int k = 1; k < n; ++k) ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Polynomial, DegreeAndTrim) {
  EXPECT_EQ(Polynomial{}.degree(), Polynomial::kZeroDegree);
  EXPECT_EQ((Polynomial{1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ((Polynomial{0, 0, 3}).derivative(), (Polynomial{0, 6}));
  EXPECT_EQ(Polynomial::monomial(1, 3).derivative(), Polynomial::monomial(3, 2));
}

TEST(Series, Examples) {
  const auto g2 = series_coefficients(binary_generating_function(), 5);
  EXPECT_EQ(g2[0], 0);
  EXPECT_EQ(g2[2], 0);
  EXPECT_EQ(g2[3], R(1, 4));
  EXPECT_EQ(g2[4], R(1, 4));
  EXPECT_EQ(g2[5], R(3, 16));

  const auto geo = series_coefficients(RationalFunction(Polynomial{1}, Polynomial{1, -1}), 3);
  ASSERT_EQ(geo.coeffs.size(), 4u);
  for (const auto& c : geo.coeffs) EXPECT_EQ(c, 1);

  const auto g3 = series_coefficients(ternary_generating_function(), 8);
  EXPECT_EQ(g3[6], 0);
  EXPECT_EQ(g3[7], R(42, 2187));
  EXPECT_EQ(g3[8], R(336, 6561));

  EXPECT_THROW(series_coefficients(RationalFunction(Polynomial{1}, Polynomial{0, 1}), 3), DomainError);
}

TEST(Series, RoundTripLinearityAndDerivative) {
  std::mt19937 rng(9);
  constexpr std::size_t N = 12;
  for (int i = 0; i < 40; ++i) {
    const RationalFunction f(random_poly(rng, 4, false), random_poly(rng, 3, true));
    const RationalFunction g(random_poly(rng, 4, false), random_poly(rng, 3, true));
    const auto sf = series_coefficients(f, N);
    const auto sg = series_coefficients(g, N);

    // series * denominator == numerator (mod t^(N+1))
    EXPECT_EQ((Polynomial(sf.coeffs) * f.denominator()).truncated(N), f.numerator().truncated(N));

    const auto ssum = series_coefficients(f + g, N);
    for (std::size_t n = 0; n <= N; ++n) EXPECT_EQ(ssum[n], sf[n] + sg[n]);

    const auto sd = series_coefficients(derivative(f), N - 1);
    for (std::size_t n = 0; n < N; ++n) EXPECT_EQ(sd[n], sf[n + 1] * static_cast<long>(n + 1));
  }
}

TEST(Evaluate, ValuesAndPoles) {
  EXPECT_EQ(evaluate(binary_generating_function(), 1), 1);
  EXPECT_EQ(evaluate(ternary_generating_function(), 1), 1);
  EXPECT_THROW(evaluate(RationalFunction(Polynomial{1}, Polynomial{1, -1}), 1), PoleError);
  EXPECT_THROW(RationalFunction(Polynomial{1}, Polynomial{}), DomainError);
}

TEST(Derivative, PgfMeans) {
  EXPECT_EQ(evaluate(derivative(binary_generating_function()), 1), 5);
  EXPECT_EQ(evaluate(derivative(ternary_generating_function()), 1), R(217, 16));
}

TEST(Moments, BinaryAndTernary) {
  const auto m2 = moments_from_gf(binary_generating_function());
  EXPECT_EQ(m2.mean, 5);
  EXPECT_EQ(m2.variance, 4);

  const auto m3 = moments_from_gf(ternary_generating_function());
  EXPECT_EQ(m3.mean, R(217, 16));
  // Oracle: truncated sums of n p_n and n^2 p_n from the closed-form PMF.
  // p_n <= n^3 (2/3)^n / 3^6 roughly, so the tail past n = 400 is far below 1e-40.
  BigRational s1 = 0, s2 = 0;
  for (std::size_t n = 7; n <= 400; ++n) {
    const auto p = ternary_pmf(n);
    s1 += p * static_cast<long>(n);
    s2 += p * static_cast<long>(n * n);
  }
  const BigRational var_trunc = s2 - s1 * s1;
  const BigRational diff = var_trunc - m3.variance;
  EXPECT_LT(abs(diff), make_rational(1, BigInt(10) * boost::multiprecision::pow(BigInt(10), 40)));
  EXPECT_EQ(m3.variance, R(4623, 256));  // frozen from the two routes above

  EXPECT_THROW(moments_from_gf(RationalFunction(Polynomial{0, 2}, Polynomial{1})), DomainError);
}
