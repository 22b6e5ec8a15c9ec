#include <gtest/gtest.h>

#include "crjet/error.hpp"
#include "crjet/scalar.hpp"
#include "test_support.hpp"

namespace crjet {
namespace {

using test::cq;
using test::q;

TEST(GaussianRational, ArithmeticStaysInLowestTerms) {
  const GaussianRational a(mpq_class(2, 4), mpq_class(-3, 9));
  EXPECT_EQ(a.real(), mpq_class(1, 2));
  EXPECT_EQ(a.imag(), mpq_class(-1, 3));
  EXPECT_EQ(a.real().get_den(), 2);
  EXPECT_EQ((q(1, 2) + q(1, 3)), q(5, 6));
  EXPECT_EQ((q(1, 2) * q(2, 3)), q(1, 3));
}

TEST(GaussianRational, ComplexProductAndQuotient) {
  EXPECT_EQ(cq(1, 2) * cq(3, -1), cq(5, 5));
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), q(-1));
  EXPECT_EQ(cq(5, 5) / cq(3, -1), cq(1, 2));
  EXPECT_EQ(cq(3, 4).conj(), cq(3, -4));
}

TEST(GaussianRational, FusedMultiplyAddMatchesSeparateOperations) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const GaussianRational a(rng.rational(9), trial % 3 == 0 ? mpq_class(0) : rng.rational(9));
    const GaussianRational b(rng.rational(9), trial % 2 == 0 ? mpq_class(0) : rng.rational(9));
    GaussianRational acc(rng.rational(9), rng.rational(9));
    const GaussianRational expected = acc + a * b;
    acc.add_product(a, b);
    EXPECT_EQ(acc, expected);
  }
}

TEST(GaussianRational, DivisionByZeroIsRejected) {
  EXPECT_THROW(q(1) / q(0), Error);
}

TEST(Rationals, ParseAcceptsFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), mpq_class(1, 2));
  EXPECT_EQ(parse_rational("-7"), mpq_class(-7));
  EXPECT_EQ(parse_rational("0.25"), mpq_class(1, 4));
  EXPECT_EQ(parse_rational("1e-6"), mpq_class(1, 1000000));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
}

TEST(Rationals, ShortestDecimalOfDouble) {
  EXPECT_EQ(rational_from_double(1e-6), mpq_class(1, 1000000));
  EXPECT_EQ(rational_from_double(0.1), mpq_class(1, 10));
  EXPECT_EQ(rational_to_string(mpq_class(-3, 4)), "-3/4");
  EXPECT_EQ(rational_to_string(mpq_class(5)), "5");
}

TEST(FloatTraits, RealityUsesRelativeTolerance) {
  EXPECT_TRUE(ScalarTraits<FloatComplex>::is_real({1e6, 1e-5}));
  EXPECT_FALSE(ScalarTraits<FloatComplex>::is_real({1.0, 1e-9}));
  EXPECT_TRUE(ScalarTraits<FloatComplex>::is_real({0.0, 1e-11}));
}

}  // namespace
}  // namespace crjet
