#include <gtest/gtest.h>

#include "crjet/error.hpp"
#include "crjet/expression.hpp"
#include "crjet/series_ops.hpp"
#include "test_support.hpp"

namespace crjet {
namespace {

using test::q;

std::string syntax_message(const std::string& text) {
  try {
    parse_expression(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::syntax_error) << text;
    return e.what();
  }
  ADD_FAILURE() << "no error for " << text;
  return {};
}

TEST(Expression, GrammarExamples) {
  const auto full = VariableSpace::full("source", 1, 0);
  EXPECT_EQ(parse_series("~z1*z1", full, 2),
            ExactSeries::monomial(full, MultiIndex{1, 1}, q(1), 2));
  const auto real = VariableSpace::real_coordinates("source", 1, 1);
  EXPECT_EQ(to_text(parse_series("(x1+y1)^2", real, 2)), "x1^2 + 2*x1*y1 + y1^2");
}

TEST(Expression, PrecedenceAndUnaryMinus) {
  const auto s = test::real_space({"x", "y"});
  EXPECT_EQ(to_text(parse_series("-x^2", s, 3)), "-x^2");
  EXPECT_EQ(to_text(parse_series("2*x + 3*y^2*x", s, 3)), "2*x + 3*x*y^2");
  EXPECT_EQ(to_text(parse_series("x - y - x", s, 3)), "-y");
  EXPECT_EQ(to_text(parse_series("-(x - y)^2", s, 3)), "-x^2 + 2*x*y - y^2");
  EXPECT_EQ(to_text(parse_series("x^0 + 1/2", s, 3)), "3/2");
}

TEST(Expression, ComplexLiteralsAndImaginaryUnit) {
  const auto s = test::real_space({"x"});
  const ExactSeries a = parse_series("(1/2, -3)*x + i*x^2 - (0, 2)", s, 2);
  EXPECT_EQ(a.coefficient(MultiIndex{1}), GaussianRational(mpq_class(1, 2), mpq_class(-3)));
  EXPECT_EQ(a.coefficient(MultiIndex{2}), GaussianRational::i());
  EXPECT_EQ(a.constant_term(), GaussianRational(mpq_class(0), mpq_class(-2)));
  EXPECT_EQ(parse_series(to_text(a), s, 2), a);
}

TEST(Expression, ImaginaryPartIdentity) {
  const auto full = VariableSpace::full("source", 1, 1);
  const ExactSeries im_w = parse_series("-1/2*i*w1 + 1/2*i*~w1", full, 2);
  EXPECT_EQ(to_text(realify(im_w)), "v1");
  EXPECT_EQ(to_text(realify(parse_series("1/2*i*w1 - 1/2*i*~w1", full, 2))), "-v1");
}

TEST(Expression, Truncation) {
  const auto s = test::real_space({"x"});
  EXPECT_EQ(to_text(parse_series("(1 + x)^5", s, 2)), "1 + 5*x + 10*x^2");
  EXPECT_EQ(to_text(parse_series("x^7", s, 3)), "0");
}

TEST(Expression, SyntaxErrorsCarryPositions) {
  EXPECT_NE(syntax_message("x + * y").find("position 4"), std::string::npos);
  EXPECT_NE(syntax_message("x^-2").find("negative exponent"), std::string::npos);
  EXPECT_NE(syntax_message("x^1/2").find("fractional exponent"), std::string::npos);
  EXPECT_NE(syntax_message("x^1.5").find("fractional exponent"), std::string::npos);
  EXPECT_NE(syntax_message("(x + 1").find("expected ')'"), std::string::npos);
  EXPECT_NE(syntax_message("1/0").find("zero denominator"), std::string::npos);
  syntax_message("");
  syntax_message("2x");
  syntax_message("x y");
  syntax_message("~");
}

TEST(Expression, UnknownVariable) {
  const auto s = test::real_space({"x"});
  EXPECT_EQ(test::error_code_of([&] { parse_series("x + q7", s, 2); }), ErrorCode::unknown_variable);
}

TEST(Expression, AgreesWithDirectConstructionOnRandomInputs) {
  const auto space = VariableSpace::full("source", 1, 1);
  const std::vector<std::string> names = space->names();
  for (std::uint64_t c = 0; c < 200; ++c) {
    Rng rng(2024, c);
    const unsigned order = static_cast<unsigned>(rng.integer(1, 5));
    auto random_polynomial = [&](std::string& text) {
      std::vector<ExactSeries::Term> terms;
      const auto count = rng.integer(1, 5);
      for (std::int64_t t = 0; t < count; ++t) {
        const mpq_class re = rng.rational(6);
        const mpq_class im = rng.integer(0, 1) == 0 ? mpq_class(0) : rng.rational(6);
        MultiIndex index(names.size());
        std::string term = "(" + rational_to_string(re) + ", " + rational_to_string(im) + ")";
        const auto degree = rng.integer(0, order);
        for (std::int64_t e = 0; e < degree; ++e) {
          const auto v = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(names.size()) - 1));
          index.increment(v);
          term += rng.integer(0, 1) == 0 ? "*" + names[v] : "*" + names[v] + "^1";
        }
        text += (t == 0 ? "" : " + ") + term;
        terms.push_back({index, GaussianRational(re, im)});
      }
      return ExactSeries::from_terms(space, order, std::move(terms));
    };
    std::string a_text;
    std::string b_text;
    const ExactSeries a = random_polynomial(a_text);
    const ExactSeries b = random_polynomial(b_text);
    const unsigned p = static_cast<unsigned>(rng.integer(0, 3));
    ExactSeries expected = ExactSeries::constant(space, GaussianRational(1), order);
    for (unsigned i = 0; i < p; ++i) expected = expected * b;
    expected = a - expected;
    const std::string text = a_text + " - (" + b_text + ")^" + std::to_string(p);
    EXPECT_EQ(parse_series(text, space, order), expected) << text;
  }
}

}  // namespace
}  // namespace crjet
