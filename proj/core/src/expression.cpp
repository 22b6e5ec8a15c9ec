#include "crjet/expression.hpp"

#include <cctype>
#include <limits>

#include "crjet/error.hpp"

namespace crjet {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExpressionAst parse() {
    ExpressionAst ast{sum()};
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return ast;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw Error(ErrorCode::syntax_error, "position " + std::to_string(pos) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static ExpressionNode binary(ExpressionNode::Kind kind, ExpressionNode lhs, ExpressionNode rhs,
                               std::size_t position) {
    ExpressionNode node;
    node.kind = kind;
    node.position = position;
    node.children.push_back(std::move(lhs));
    node.children.push_back(std::move(rhs));
    return node;
  }

  ExpressionNode sum() {
    ExpressionNode lhs = product();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(ExpressionNode::Kind::add, std::move(lhs), product(), at);
      } else if (accept('-')) {
        lhs = binary(ExpressionNode::Kind::subtract, std::move(lhs), product(), at);
      } else {
        return lhs;
      }
    }
  }

  ExpressionNode product() {
    ExpressionNode lhs = unary();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = binary(ExpressionNode::Kind::multiply, std::move(lhs), unary(), at);
    }
  }

  ExpressionNode unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      ExpressionNode node;
      node.kind = ExpressionNode::Kind::negate;
      node.position = at;
      node.children.push_back(unary());
      return node;
    }
    if (accept('+')) return unary();
    return power();
  }

  ExpressionNode power() {
    ExpressionNode base = atom();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("exponent must be an integer literal");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.')) {
      fail_at(start, "fractional exponent");
    }
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 5 || std::stoul(digits) > std::numeric_limits<std::uint16_t>::max()) {
      fail_at(start, "exponent too large");
    }
    ExpressionNode node;
    node.kind = ExpressionNode::Kind::power;
    node.position = at;
    node.exponent = static_cast<unsigned>(std::stoul(digits));
    node.children.push_back(std::move(base));
    return node;
  }

  mpq_class rational(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_space();
    }
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected a number");
    const std::size_t digits_start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    std::string literal(text_.substr(digits_start, pos_ - digits_start));
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den_start = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      if (den_start == pos_) fail("expected a denominator");
      literal += "/" + std::string(text_.substr(den_start, pos_ - den_start));
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || is_alpha(text_[pos_]))) {
      fail("malformed number");
    }
    mpq_class q;
    if (q.set_str(literal, 10) != 0) fail_at(start, "malformed number");
    if (q.get_den() == 0) fail_at(start, "zero denominator");
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  }

  ExpressionNode atom() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    ExpressionNode node;
    node.position = at;
    if (is_digit(c)) {
      node.value = GaussianRational(rational(false));
      return node;
    }
    if (c == '~' || is_alpha(c)) {
      const std::size_t start = pos_;
      if (c == '~') ++pos_;
      if (pos_ >= text_.size() || !is_alpha(text_[pos_])) fail("expected a variable name after '~'");
      while (pos_ < text_.size() && is_alnum(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "i") {
        node.value = GaussianRational(mpq_class(0), mpq_class(1));
        return node;
      }
      node.kind = ExpressionNode::Kind::variable;
      node.name = name;
      return node;
    }
    if (accept('(')) {
      // A complex literal is a parenthesised pair of signed rationals.
      const std::size_t saved = pos_;
      try {
        const mpq_class re = rational(true);
        if (accept(',')) {
          const mpq_class im = rational(true);
          expect(')');
          node.value = GaussianRational(re, im);
          return node;
        }
      } catch (const Error&) {
        // Not a complex literal; reparse as a grouped expression.
      }
      pos_ = saved;
      ExpressionNode inner = sum();
      expect(')');
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

ExactSeries eval(const ExpressionNode& node, const SpacePtr& space, unsigned order) {
  using Kind = ExpressionNode::Kind;
  switch (node.kind) {
    case Kind::number:
      return ExactSeries::constant(space, node.value, order);
    case Kind::variable:
      if (!space->index_of(node.name)) {
        throw Error(ErrorCode::unknown_variable, "position " + std::to_string(node.position) +
                                                     ": unknown variable '" + node.name + "'");
      }
      return ExactSeries::variable(space, node.name, order);
    case Kind::negate:
      return -eval(node.children[0], space, order);
    case Kind::add: {
      ExactSeries out = eval(node.children[0], space, order);
      out += eval(node.children[1], space, order);
      return out;
    }
    case Kind::subtract: {
      ExactSeries out = eval(node.children[0], space, order);
      out -= eval(node.children[1], space, order);
      return out;
    }
    case Kind::multiply:
      return eval(node.children[0], space, order) * eval(node.children[1], space, order);
    case Kind::power: {
      const ExactSeries base = eval(node.children[0], space, order);
      ExactSeries out = ExactSeries::constant(space, GaussianRational(1), order);
      for (unsigned e = node.exponent; e > 0; --e) {
        if (out.is_zero()) break;
        out = out * base;
      }
      return out;
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown expression node");
}

}  // namespace

ExpressionAst parse_expression(std::string_view text) { return Parser(text).parse(); }

ExactSeries evaluate(const ExpressionAst& ast, const SpacePtr& space, unsigned order) {
  if (!space) throw Error(ErrorCode::invalid_argument, "expression needs a variable space");
  return eval(ast.root, space, order);
}

ExactSeries parse_series(std::string_view text, const SpacePtr& space, unsigned order) {
  return evaluate(parse_expression(text), space, order);
}

}  // namespace crjet
