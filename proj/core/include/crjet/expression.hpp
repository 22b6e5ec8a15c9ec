#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crjet/scalar.hpp"
#include "crjet/series.hpp"

namespace crjet {

/// Node of a parsed polynomial expression.
struct ExpressionNode {
  enum class Kind { number, variable, add, subtract, multiply, negate, power };

  Kind kind = Kind::number;
  GaussianRational value;  ///< kind == number; `i` parses to (0, 1)
  std::string name;        ///< kind == variable
  unsigned exponent = 0;   ///< kind == power
  std::size_t position = 0;
  std::vector<ExpressionNode> children;
};

/// Grammar, loosest binding first:
///   sum     := product (('+' | '-') product)*
///   product := unary ('*' unary)*
///   unary   := ('-' | '+') unary | power
///   power   := atom ('^' integer)?
///   atom    := rational | 'i' | variable | '(' sum ')' | '(' rational ',' rational ')'
/// A rational is `p` or `p/q` with an optional sign inside complex literals.
/// Variables are an optional `~` followed by letters and digits.
struct ExpressionAst {
  ExpressionNode root;
};

/// Throws Error(syntax_error) with the 0-based character position.
ExpressionAst parse_expression(std::string_view text);

/// Evaluates in the ring truncated at `order`. Throws Error(unknown_variable)
/// for names missing from `space`.
ExactSeries evaluate(const ExpressionAst& ast, const SpacePtr& space, unsigned order);

ExactSeries parse_series(std::string_view text, const SpacePtr& space, unsigned order);

}  // namespace crjet
