#include "crjet/scalar.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cctype>
#include <cmath>
#include <string>

#include "crjet/error.hpp"

namespace crjet {

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  if (sgn(rhs.im_) != 0) im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  if (sgn(rhs.im_) != 0) im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  // Real operands dominate after realification; skip the cross terms then.
  const bool lhs_real = sgn(im_) == 0;
  const bool rhs_real = sgn(rhs.im_) == 0;
  if (lhs_real && rhs_real) {
    re_ *= rhs.re_;
  } else if (rhs_real) {
    re_ *= rhs.re_;
    im_ *= rhs.re_;
  } else if (lhs_real) {
    im_ = re_ * rhs.im_;
    re_ *= rhs.re_;
  } else {
    mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
    im_ = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
  }
  return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  thread_local mpq_class scratch;
  const bool a_real = sgn(a.im_) == 0;
  const bool b_real = sgn(b.im_) == 0;
  mpq_mul(scratch.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
  mpq_add(re_.get_mpq_t(), re_.get_mpq_t(), scratch.get_mpq_t());
  if (a_real && b_real) return;
  if (!a_real && !b_real) {
    mpq_mul(scratch.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    mpq_sub(re_.get_mpq_t(), re_.get_mpq_t(), scratch.get_mpq_t());
  }
  if (!b_real) {
    mpq_mul(scratch.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
    mpq_add(im_.get_mpq_t(), im_.get_mpq_t(), scratch.get_mpq_t());
  }
  if (!a_real) {
    mpq_mul(scratch.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
    mpq_add(im_.get_mpq_t(), im_.get_mpq_t(), scratch.get_mpq_t());
  }
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorCode::invalid_argument, "division by zero");
  }
  if (sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  const mpq_class norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  *this *= rhs.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

bool ScalarTraits<FloatComplex>::is_real(const FloatComplex& c) {
  return std::abs(c.imag()) <= 1e-10 * std::max(1.0, std::abs(c.real()));
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

mpq_class parse_decimal(const std::string& text) {
  // [sign] digits [. digits] [e [sign] digits]
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;
  bool any_digit = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits += text[pos++];
    any_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos++];
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) throw Error(ErrorCode::invalid_argument, "malformed number: " + text);
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    std::string exponent = text.substr(pos);
    if (!is_integer_literal(exponent)) {
      throw Error(ErrorCode::invalid_argument, "malformed exponent: " + text);
    }
    scale += std::stol(exponent);
    pos = text.size();
  }
  if (pos != text.size()) throw Error(ErrorCode::invalid_argument, "malformed number: " + text);
  mpz_class num(digits.empty() ? "0" : digits, 10);
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  mpq_class q = scale >= 0 ? mpq_class(num * ten_power) : mpq_class(num, ten_power);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
      throw Error(ErrorCode::invalid_argument, "malformed rational: " + text);
    }
    mpz_class d(den, 10);
    if (d == 0) throw Error(ErrorCode::invalid_argument, "zero denominator: " + text);
    mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num, 10), d);
    q.canonicalize();
    return q;
  }
  if (is_integer_literal(text)) {
    return mpq_class(mpz_class(text[0] == '+' ? text.substr(1) : text, 10));
  }
  return parse_decimal(text);
}

mpq_class rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::invalid_argument, "non-finite value");
  std::array<char, 64> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), x);
  if (ec != std::errc()) throw Error(ErrorCode::invalid_argument, "cannot format double");
  return parse_decimal(std::string(buffer.data(), end));
}

FloatComplex to_float(const GaussianRational& c) {
  return {c.real().get_d(), c.imag().get_d()};
}

}  // namespace crjet
