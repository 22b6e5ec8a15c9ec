#include <gtest/gtest.h>

#include "crjet/error.hpp"
#include "crjet/series.hpp"
#include "crjet/series_ops.hpp"
#include "test_support.hpp"

namespace crjet {
namespace {

using test::q;
using test::real_space;

TEST(MultiIndex, TracksTotalDegree) {
  MultiIndex a{2, 0, 1};
  EXPECT_EQ(a.total_degree(), 3u);
  a.set(1, 4);
  EXPECT_EQ(a.total_degree(), 7u);
  a.increment(0);
  EXPECT_EQ(a.total_degree(), 8u);
  EXPECT_EQ((MultiIndex{1, 2} + MultiIndex{3, 0}), (MultiIndex{4, 2}));
  EXPECT_THROW(a.set(0, 70000), Error);
}

TEST(MultiIndex, GradedLexOrder) {
  const GradedLexLess less;
  EXPECT_TRUE(less(MultiIndex{1, 0}, MultiIndex{2, 0}));
  EXPECT_TRUE(less(MultiIndex{2, 0}, MultiIndex{1, 1}));
  EXPECT_TRUE(less(MultiIndex{1, 1}, MultiIndex{0, 2}));
  EXPECT_FALSE(less(MultiIndex{1, 1}, MultiIndex{1, 1}));
}

TEST(VariableSpace, ConjugationMustBeAnInvolution) {
  using K = VariableKind;
  EXPECT_NO_THROW(VariableSpace("s", {"z1", "~z1"}, {K::holomorphic, K::antiholomorphic}, {1, 0}));
  EXPECT_THROW(VariableSpace("s", {"z1", "~z1"}, {K::holomorphic, K::antiholomorphic}, {0, 1}), Error);
  EXPECT_THROW(VariableSpace("s", {"x1", "y1"}, {K::real, K::real}, {1, 0}), Error);
  EXPECT_THROW(VariableSpace("s", {"x1", "x1"}, {K::real, K::real}, {0, 1}), Error);
}

TEST(VariableSpace, StandardLayouts) {
  const auto full = VariableSpace::full("source", 2, 1);
  EXPECT_EQ(full->names(), (std::vector<std::string>{"z1", "z2", "~z1", "~z2", "w1", "~w1"}));
  EXPECT_EQ(full->conjugate_of(0), 2u);
  EXPECT_EQ(full->conjugate_of(5), 4u);
  const auto real = VariableSpace::real_coordinates("source", 1, 2);
  EXPECT_EQ(real->names(), (std::vector<std::string>{"x1", "y1", "u1", "u2", "v1", "v2"}));
  const auto graph = VariableSpace::graph("source", 1, 1);
  EXPECT_EQ(graph->names(), (std::vector<std::string>{"x1", "y1", "u1"}));
  const auto holo = VariableSpace::holomorphic("source", 1, 1);
  EXPECT_FALSE(holo->is_closed());
  EXPECT_EQ(holo->conjugate_space(holo)->names(), (std::vector<std::string>{"~z1", "~w1"}));
}

TEST(Series, MonomialConstructor) {
  const auto x = real_space({"x"});
  EXPECT_EQ(to_text(ExactSeries::monomial(x, MultiIndex{2}, q(1), 4)), "x^2");
  EXPECT_TRUE(ExactSeries::monomial(x, MultiIndex{5}, q(1), 4).is_zero());
  const auto xy = real_space({"x", "y"});
  EXPECT_EQ(to_text(ExactSeries::monomial(xy, MultiIndex{1, 1}, q(3, 2), 2)), "3/2*x*y");
  EXPECT_THROW(ExactSeries::monomial(xy, MultiIndex{1}, q(1), 2), Error);
}

TEST(Series, Addition) {
  const auto s = real_space({"x", "y", "u"});
  const auto x = ExactSeries::variable(s, "x", 3);
  const auto y = ExactSeries::variable(s, "y", 3);
  const auto u = ExactSeries::variable(s, "u", 3);
  EXPECT_TRUE((x * x + -(x * x)).is_zero());
  EXPECT_EQ((x + y) + (x - y), x.scaled(q(2)));
  EXPECT_EQ(to_text((x * x + x * y) + (x * y + u * u)), "x^2 + 2*x*y + u^2");
}

TEST(Series, AdditionRejectsMismatchedOrderOrSpace) {
  const auto s = real_space({"x"});
  const auto t = real_space({"y"});
  EXPECT_THROW(ExactSeries::variable(s, "x", 2) + ExactSeries::variable(s, "x", 3), Error);
  EXPECT_THROW(ExactSeries::variable(s, "x", 2) + ExactSeries::variable(t, "y", 2), Error);
}

TEST(Series, MultiplicationTruncates) {
  const auto s = real_space({"x"});
  const auto x = ExactSeries::variable(s, "x", 2);
  EXPECT_EQ(to_text(x * x), "x^2");
  EXPECT_EQ(to_text((x + x * x) * (x + x * x)), "x^2");
  const auto one = ExactSeries::constant(s, q(1), 3);
  const auto x3 = ExactSeries::variable(s, "x", 3);
  const auto geometric = one - x3 + x3 * x3 - x3 * x3 * x3;
  EXPECT_EQ((one + x3) * geometric, one);
}

TEST(Series, TruncationAndSlices) {
  const auto s = real_space({"x", "y"});
  const ExactSeries a = test::S("1 + x + x*y + x^3 + y^4", s, 4);
  EXPECT_EQ(to_text(a.truncated(2)), "1 + x + x*y");
  EXPECT_EQ(a.truncated(2).order(), 2u);
  EXPECT_EQ(to_text(a.degree_slice(2, 3)), "x*y + x^3");
  EXPECT_THROW(a.truncated(5), Error);
  EXPECT_EQ(a.degree(), 4);
  EXPECT_EQ(a.min_degree(), 0);
  EXPECT_EQ(a.coefficient(MultiIndex{1, 1}), q(1));
  EXPECT_EQ(a.coefficient(MultiIndex{2, 0}), q(0));
}

TEST(Series, CanonicalTextForComplexCoefficients) {
  const auto s = VariableSpace::full("source", 1, 0);
  const ExactSeries a = test::S("i*z1 - 2*~z1 + (1/2, -3)*z1^2", s, 2);
  EXPECT_EQ(to_text(a), "(0, 1)*z1 - 2*~z1 + (1/2, -3)*z1^2");
  EXPECT_EQ(to_text(ExactSeries::zero(s, 2)), "0");
  EXPECT_EQ(to_text(-ExactSeries::variable(s, "z1", 2)), "-z1");
}

TEST(Series, FloatModeMirrorsExactMode) {
  const auto s = real_space({"x", "y"});
  const ExactSeries a = test::S("1/3*x + x*y - 2*y^2", s, 3);
  const FloatSeries f = to_float(a);
  ASSERT_EQ(f.size(), a.size());
  EXPECT_NEAR(f.coefficient(MultiIndex{1, 0}).real(), 1.0 / 3.0, 1e-15);
  const FloatSeries sq = f * f;
  EXPECT_NEAR(sq.coefficient(MultiIndex{2, 1}).real(), 2.0 / 3.0, 1e-15);
  EXPECT_TRUE(sq.is_real());
}

TEST(SeriesVector, ComponentsMustAgree) {
  const auto s = real_space({"x"});
  EXPECT_NO_THROW(ExactSeriesVector({ExactSeries::zero(s, 2), ExactSeries::variable(s, "x", 2)}));
  EXPECT_THROW(ExactSeriesVector({ExactSeries::zero(s, 2), ExactSeries::zero(s, 3)}), Error);
}

}  // namespace
}  // namespace crjet
