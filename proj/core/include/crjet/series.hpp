#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crjet/multi_index.hpp"
#include "crjet/scalar.hpp"
#include "crjet/variable_space.hpp"

namespace crjet {

/// Sparse multivariate power series truncated at a fixed total degree.
///
/// Terms are kept sorted in graded-lex order with no zero coefficients and no
/// term of total degree above `order()`. Values are immutable; every
/// operation returns a new series. Arithmetic between series requires the
/// same space and the same truncation order.
template <class Scalar>
class BasicSeries {
 public:
  using scalar_type = Scalar;

  struct Term {
    MultiIndex index;
    Scalar coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  /// Zero series; needed for default-constructible containers. Has no space.
  BasicSeries() = default;

  static BasicSeries zero(SpacePtr space, unsigned order);
  static BasicSeries constant(SpacePtr space, const Scalar& c, unsigned order);
  static BasicSeries variable(SpacePtr space, const std::string& name, unsigned order);
  /// Single term; the zero series when total_degree(index) > order.
  static BasicSeries monomial(SpacePtr space, const MultiIndex& index, const Scalar& c,
                              unsigned order);
  /// Merges duplicate indices, drops zeros and terms above `order`.
  static BasicSeries from_terms(SpacePtr space, unsigned order, std::vector<Term> terms);

  const SpacePtr& space_ptr() const noexcept { return space_; }
  const VariableSpace& space() const { return *space_; }
  unsigned order() const noexcept { return order_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coefficient(const MultiIndex& index) const;
  Scalar constant_term() const;
  /// Highest / lowest total degree among stored terms; -1 for the zero series.
  int degree() const noexcept;
  int min_degree() const noexcept;

  /// All coefficients real (exactly, or within tolerance in float mode).
  bool is_real() const;

  /// Drops terms above `order`; `order` must not exceed the current order.
  BasicSeries truncated(unsigned order) const;
  /// Reinterprets the stored terms as an exact polynomial and re-labels it
  /// with a higher truncation order. Only valid for series that are
  /// polynomials by construction (e.g. algebraic model data).
  BasicSeries promoted(unsigned order) const;
  /// Terms of total degree in [lo, hi].
  BasicSeries degree_slice(unsigned lo, unsigned hi) const;

  BasicSeries scaled(const Scalar& c) const;

  BasicSeries& operator+=(const BasicSeries& rhs);
  BasicSeries& operator-=(const BasicSeries& rhs);
  BasicSeries& operator*=(const BasicSeries& rhs);

  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
  friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }
  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) { return multiply(a, b); }
  friend BasicSeries operator-(const BasicSeries& a) { return a.scaled(Scalar(-1)); }

  /// Same space, order, and terms.
  friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
    return a.order_ == b.order_ && same_space(a.space_, b.space_) && a.terms_ == b.terms_;
  }

  static BasicSeries multiply(const BasicSeries& a, const BasicSeries& b);

 private:
  template <class>
  friend class TermAccumulator;

  BasicSeries(SpacePtr space, unsigned order, std::vector<Term> sorted_terms)
      : space_(std::move(space)), order_(order), terms_(std::move(sorted_terms)) {}

  SpacePtr space_;
  unsigned order_ = 0;
  std::vector<Term> terms_;
};

/// Mutable builder collecting terms in graded-lex order; used by every
/// operation that produces many partial sums.
template <class Scalar>
class TermAccumulator {
 public:
  TermAccumulator(SpacePtr space, unsigned order) : space_(std::move(space)), order_(order) {}

  void add(const MultiIndex& index, const Scalar& c);
  void add(const BasicSeries<Scalar>& s);
  void add_scaled(const BasicSeries<Scalar>& s, const Scalar& c);
  /// Adds a*b truncated at this accumulator's order. Operands may live in any
  /// space whose variables line up with the accumulator's.
  void add_product(const BasicSeries<Scalar>& a, const BasicSeries<Scalar>& b);

  BasicSeries<Scalar> finish() &&;

 private:
  SpacePtr space_;
  unsigned order_;
  std::map<MultiIndex, Scalar, GradedLexLess> terms_;
};

using ExactSeries = BasicSeries<GaussianRational>;
using FloatSeries = BasicSeries<FloatComplex>;

/// A d-tuple of series sharing one space, order and scalar type.
template <class Scalar>
class BasicSeriesVector {
 public:
  BasicSeriesVector() = default;
  explicit BasicSeriesVector(std::vector<BasicSeries<Scalar>> components);

  std::size_t size() const noexcept { return components_.size(); }
  const BasicSeries<Scalar>& operator[](std::size_t i) const { return components_.at(i); }
  const std::vector<BasicSeries<Scalar>>& components() const noexcept { return components_; }
  auto begin() const noexcept { return components_.begin(); }
  auto end() const noexcept { return components_.end(); }

  const SpacePtr& space_ptr() const;
  unsigned order() const;

  friend bool operator==(const BasicSeriesVector&, const BasicSeriesVector&) = default;

 private:
  std::vector<BasicSeries<Scalar>> components_;
};

using ExactSeriesVector = BasicSeriesVector<GaussianRational>;

/// Throws Error(space_mismatch / order_mismatch) unless a and b are compatible.
void check_compatible(const SpacePtr& a_space, unsigned a_order, const SpacePtr& b_space,
                      unsigned b_order);

extern template class BasicSeries<GaussianRational>;
extern template class BasicSeries<FloatComplex>;
extern template class TermAccumulator<GaussianRational>;
extern template class TermAccumulator<FloatComplex>;
extern template class BasicSeriesVector<GaussianRational>;
extern template class BasicSeriesVector<FloatComplex>;

}  // namespace crjet
