#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>

#include <boost/container/small_vector.hpp>

namespace crjet {

/// Exponent vector over the variables of a VariableSpace, with its total
/// degree cached.
class MultiIndex {
 public:
  using Exponent = std::uint16_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t size) : exponents_(size, 0) {}
  MultiIndex(std::initializer_list<unsigned> exponents);
  explicit MultiIndex(std::span<const unsigned> exponents);

  std::size_t size() const noexcept { return exponents_.size(); }
  unsigned operator[](std::size_t i) const noexcept { return exponents_[i]; }
  unsigned total_degree() const noexcept { return degree_; }

  void set(std::size_t i, unsigned exponent);
  void increment(std::size_t i, unsigned by = 1);

  MultiIndex& operator+=(const MultiIndex& rhs);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept {
    return a.degree_ == b.degree_ && a.exponents_ == b.exponents_;
  }

 private:
  boost::container::small_vector<Exponent, 8> exponents_;
  unsigned degree_ = 0;
};

/// Graded-lex order: lower total degree first; within a degree, a larger
/// exponent on an earlier variable comes first (x^2 < xy < y^2).
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const noexcept {
    if (a.total_degree() != b.total_degree()) {
      return a.total_degree() < b.total_degree();
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) {
        return a[i] > b[i];
      }
    }
    return false;
  }
};

}  // namespace crjet
