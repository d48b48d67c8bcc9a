#include <gtest/gtest.h>

#include "homleib/scalar.hpp"

using homleib::Fp;
using homleib::Rational;

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("-3/2"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("\xE2\x88\x92" "3/2"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("4/8"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, ExactArithmetic) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 2), Rational(1));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_TRUE(Rational().is_zero());
}

TEST(Fp, ArithmeticModSeven) {
  Fp::Modulus scope(7);
  EXPECT_EQ(Fp(3) + Fp(5), Fp(1));
  EXPECT_EQ(Fp(3) * Fp(5), Fp(1));
  EXPECT_EQ(Fp(1) / Fp(3), Fp(5));
  EXPECT_EQ(-Fp(2), Fp(5));
  EXPECT_EQ(Fp(-1), Fp(6));
  EXPECT_EQ(Fp::parse("1/2"), Fp(4));
  EXPECT_THROW(Fp(1) / Fp(0), std::domain_error);
}

TEST(Fp, ModulusScopesNest) {
  Fp::Modulus outer(5);
  {
    Fp::Modulus inner(11);
    EXPECT_EQ(Fp::modulus(), 11u);
  }
  EXPECT_EQ(Fp::modulus(), 5u);
  EXPECT_THROW(Fp::Modulus(9), std::invalid_argument);
}

TEST(Fp, EveryNonzeroElementInvertible) {
  Fp::Modulus scope(101);
  for (long a = 1; a < 101; ++a) EXPECT_EQ(Fp(a) * Fp(a).inverse(), Fp(1));
}
