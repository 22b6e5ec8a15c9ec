#include <array>
#include <charconv>
#include <string>

#include "crjet/series_ops.hpp"

namespace crjet {

namespace {

std::string number_text(const mpq_class& q) { return rational_to_string(q); }

std::string number_text(double x) {
  std::array<char, 64> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), x);
  return std::string(buffer.data(), end);
}

template <class S>
std::string coefficient_text(const S& c) {
  if (ScalarTraits<S>::is_real(c) && c.imag() == 0) return number_text(c.real());
  return "(" + number_text(c.real()) + ", " + number_text(c.imag()) + ")";
}

}  // namespace

template <class S>
std::string to_text(const BasicSeries<S>& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : s.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < t.index.size(); ++i) {
      if (t.index[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += s.space().name(i);
      if (t.index[i] > 1) mono += '^' + std::to_string(t.index[i]);
    }
    std::string term;
    const std::string coeff = coefficient_text(t.coeff);
    if (mono.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = mono;
    } else if (coeff == "-1") {
      term = "-" + mono;
    } else {
      term = coeff + "*" + mono;
    }
    if (first) {
      out = term;
      first = false;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

template std::string to_text(const BasicSeries<GaussianRational>&);
template std::string to_text(const BasicSeries<FloatComplex>&);

}  // namespace crjet
