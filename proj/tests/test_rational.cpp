#include <gtest/gtest.h>

#include "nilsym/rational.hpp"

using nilsym::Rational;

TEST(Rational, CanonicalForm) {
  Rational r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(4, 2), Rational(2));
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-1/3").str(), "-1/3");
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", " 1", "1 ", "a", "1/-2", "--1"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, Arithmetic) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_THROW(a / Rational(0), std::domain_error);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(2), Rational(3, 2));
  EXPECT_EQ(abs(Rational(-5, 7)), Rational(5, 7));
  EXPECT_EQ(Rational(-2).sign(), -1);
  EXPECT_TRUE(Rational(0).is_zero());
}

TEST(Rational, LargeValuesStayExact) {
  Rational big(1LL << 62);
  Rational prod = big * big * big;
  EXPECT_EQ(prod / big / big, big);
}
