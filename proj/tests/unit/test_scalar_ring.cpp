#include <gtest/gtest.h>

#include "jvoa/errors.hpp"
#include "jvoa/rpoly.hpp"
#include "support.hpp"

using namespace jvoa;

namespace {

RPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RPoly(std::move(v));
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(to_fraction_string(Rational(0)), "0/1");
  EXPECT_EQ(parse_rational("-10/4"), make_rational(-5, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
}

TEST(Rational, BinomialMatchesFallingFactorial) {
  for (long m = -8; m <= 8; ++m)
    for (long i = 0; i <= 7; ++i) {
      Rational expect = 1;
      for (long j = 0; j < i; ++j) expect *= make_rational(m - j, j + 1);
      EXPECT_EQ(Rational(binomial(m, i)), expect) << m << " " << i;
    }
  EXPECT_EQ(binomial(5, -1), 0);
}

TEST(RPoly, EvaluateExamples) {
  EXPECT_EQ(RPoly::r().evaluate_at(1), 1);
  EXPECT_EQ((RPoly::r() * Rational(-2)).evaluate_at(1), -2);
  EXPECT_EQ(poly({2, -3, 1}).evaluate_at(2), 0);
}

TEST(RPoly, CanonicalTrailingZeros) {
  RPoly p(std::vector<Rational>{1, 0, 0});
  EXPECT_EQ(p.coefficients().size(), 1u);
  EXPECT_TRUE(RPoly(std::vector<Rational>{0, 0}).is_zero());
  EXPECT_TRUE((RPoly::r() - RPoly::r()).is_zero());
  EXPECT_EQ(RPoly().degree(), -1);
}

TEST(RPoly, Printing) {
  EXPECT_EQ((RPoly::r() * Rational(-4)).to_string(), "-4*r");
  EXPECT_EQ(poly({2, -3, 1}).to_string(), "r^2 - 3*r + 2");
  EXPECT_EQ(RPoly().to_string(), "0");
  auto s = poly({0, 1}).to_fraction_strings();
  EXPECT_EQ(s, (std::vector<std::string>{"0/1", "1/1"}));
  EXPECT_EQ(RPoly::from_fraction_strings(s), RPoly::r());
}

TEST(RPoly, RingAxiomsRandom) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto p = fixtures::random_poly(rng), q = fixtures::random_poly(rng), s = fixtures::random_poly(rng);
    EXPECT_EQ((p * q) * s, p * (q * s));
    EXPECT_EQ(p * (q + s), p * q + p * s);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_TRUE((p + (-p)).is_zero());
  }
}

TEST(RPoly, EvaluationIsHomomorphism) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    auto p = fixtures::random_poly(rng), q = fixtures::random_poly(rng);
    auto x = fixtures::random_rational(rng);
    EXPECT_EQ((p * q).evaluate_at(x), p.evaluate_at(x) * q.evaluate_at(x));
    EXPECT_EQ((p + q).evaluate_at(x), p.evaluate_at(x) + q.evaluate_at(x));
  }
}

TEST(RPoly, DivisionAndGcd) {
  auto a = poly({-1, 0, 1});  // (r-1)(r+1)
  auto b = poly({-1, 1});
  EXPECT_EQ(RPoly::exact_quotient(a, b), poly({1, 1}));
  EXPECT_THROW(RPoly::exact_quotient(a, poly({2, 1})), Error);
  EXPECT_EQ(RPoly::gcd(a * poly({3, 1}), b * poly({3, 1}) * Rational(5)), poly({-3, 2, 1}));
  EXPECT_THROW(RPoly::divmod(a, RPoly()), ZeroPolynomial);
}

TEST(IntegerRoots, Examples) {
  EXPECT_EQ(integer_roots(RPoly::r()), (std::set<Integer>{0}));
  EXPECT_EQ(integer_roots(poly({0, -1, 1})), (std::set<Integer>{0, 1}));
  EXPECT_TRUE(integer_roots(poly({1, 0, 1})).empty());
  EXPECT_THROW(integer_roots(RPoly()), ZeroPolynomial);
}

TEST(IntegerRoots, BruteForceOracle) {
  // products of linear factors (r - k) and (2r - 1), with multiplicity
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> root(-12, 12), count(0, 4), coin(0, 3);
  for (int t = 0; t < 150; ++t) {
    RPoly p = fixtures::random_rational(rng) == 0 ? RPoly(3) : RPoly(make_rational(3, 7));
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      if (coin(rng) == 0)
        p *= poly({-1, 2});
      else
        p *= poly({-root(rng), 1});
    }
    if (coin(rng) == 0) p *= poly({1, 0, 1});
    std::set<Integer> expect;
    for (long x = -40; x <= 40; ++x)
      if (p.evaluate_at(x) == 0) expect.insert(x);
    auto got = integer_roots(p);
    EXPECT_EQ(got, expect) << p.to_string();
    for (const auto& x : got) EXPECT_EQ(p.evaluate_at(Rational(x)), 0);
  }
}
