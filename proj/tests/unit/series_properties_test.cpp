#include <gtest/gtest.h>

#include "series_properties.hpp"

namespace crjet {
namespace {

constexpr int kCases = 200;

TEST(SeriesProperties, RingAxioms) {
  const auto r = test::ring_axioms(kCases, 101);
  EXPECT_TRUE(r.ok()) << r.failure;
  EXPECT_EQ(r.cases, kCases);
}

TEST(SeriesProperties, TruncationIsARingMorphism) {
  const auto r = test::truncation_morphism(kCases, 202);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(SeriesProperties, ConjugationIsAnInvolutiveAutomorphism) {
  const auto r = test::conjugation_involution(kCases, 303);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(SeriesProperties, SubstitutionRespectsComposition) {
  const auto r = test::substitution_composition(kCases, 404);
  EXPECT_TRUE(r.ok()) << r.failure;
}

TEST(SeriesProperties, ResultIndependentOfTermOrder) {
  const auto r = test::order_independence(kCases, 505);
  EXPECT_TRUE(r.ok()) << r.failure;
}

}  // namespace
}  // namespace crjet
