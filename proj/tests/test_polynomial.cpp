#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "orbital/polynomial.hpp"

using orbital::evaluate;
using orbital::interpolate;
using orbital::Rational;
using orbital::RationalPolynomial;
using orbital::SamplePoint;

TEST(Interpolate, IdentityPolynomial) {
  auto p = interpolate({{1, 1}, {2, 2}, {3, 3}});
  EXPECT_EQ(p, RationalPolynomial({0, 1}));
}

TEST(Interpolate, Constant) {
  auto p = interpolate({{1, 1}, {2, 1}});
  EXPECT_EQ(p, RationalPolynomial::constant(1));
  EXPECT_EQ(p.degree(), 0);
}

TEST(Interpolate, FallingFactorialMatchesVandermonde) {
  std::vector<std::pair<std::int64_t, Rational>> pts{{1, 0}, {2, 0}, {3, 6}, {4, 24}};
  auto expected = oracle::vandermonde_solve(pts);
  // frozen from the Vandermonde solve: n^3 - 3n^2 + 2n
  ASSERT_EQ(expected, (std::vector<Rational>{0, 2, -3, 1}));
  auto p = interpolate({{1, 0}, {2, 0}, {3, 6}, {4, 24}});
  EXPECT_EQ(p.coefficients(), expected);
}

TEST(Interpolate, DuplicateAbscissaIsInputError) {
  EXPECT_THROW(interpolate({{1, 1}, {1, 2}}), orbital::InputError);
}

TEST(Interpolate, EmptyInputIsZero) { EXPECT_TRUE(interpolate({}).is_zero()); }

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(RationalPolynomial{}, 17), 0);
  EXPECT_EQ(evaluate(RationalPolynomial({0, 2, -3, 1}), -1), -6);
  EXPECT_EQ(evaluate(RationalPolynomial({0, Rational(1, 2), Rational(1, 2)}), 3), 6);
}

TEST(ScaleAdd, Examples) {
  RationalPolynomial sq = RationalPolynomial::monomial(2);
  RationalPolynomial lin = RationalPolynomial::monomial(1);
  EXPECT_EQ(orbital::scale_add({{1, sq}}), sq);
  EXPECT_EQ(orbital::scale_add({{Rational(1, 2), sq}, {Rational(1, 2), lin}}),
            RationalPolynomial({0, Rational(1, 2), Rational(1, 2)}));
  EXPECT_TRUE(orbital::scale_add({{1, sq}, {-1, sq}}).is_zero());
}

TEST(RationalText, RoundTripAndFormat) {
  EXPECT_EQ(orbital::to_string(Rational(6)), "6/1");
  EXPECT_EQ(orbital::to_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(orbital::parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(orbital::parse_rational("+4"), Rational(4));
  EXPECT_THROW(orbital::parse_rational("1/0"), orbital::InputError);
  EXPECT_THROW(orbital::parse_rational("x"), orbital::InputError);
  EXPECT_THROW(orbital::parse_rational(""), orbital::InputError);
}

namespace {

RationalPolynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6), num(-20, 20), den(1, 9);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return RationalPolynomial(std::move(c));
}

}  // namespace

TEST(PolynomialProperties, InterpolationRoundTrip) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 7), count(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SamplePoint> pts;
    std::set<std::int64_t> used;
    int k = count(rng);
    while (static_cast<int>(pts.size()) < k) {
      std::int64_t x = num(rng);
      if (!used.insert(x).second) continue;
      pts.push_back({x, Rational(num(rng), den(rng))});
    }
    auto p = interpolate(pts);
    EXPECT_LT(p.degree(), k);
    for (const auto& pt : pts) EXPECT_EQ(p(Rational(pt.x)), pt.y);
  }
}

TEST(PolynomialProperties, EvaluationIsRingHomomorphism) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> xs(-12, 12);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poly(rng), q = random_poly(rng);
    Rational x = xs(rng);
    EXPECT_EQ((p + q)(x), p(x) + q(x));
    EXPECT_EQ((p * q)(x), p(x) * q(x));
  }
}

TEST(PolynomialProperties, NeverZeroLeadingCoefficient) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poly(rng), q = random_poly(rng);
    for (const auto& r : {p + q, p - p, p * q, p * Rational(0), p - q}) {
      if (r.is_zero()) {
        EXPECT_EQ(r.degree(), -1);
      } else {
        EXPECT_NE(r.leading(), 0);
      }
    }
  }
}
