#include "crjet/series.hpp"

#include <algorithm>

#include "crjet/error.hpp"

namespace crjet {

MultiIndex::MultiIndex(std::initializer_list<unsigned> exponents) {
  exponents_.reserve(exponents.size());
  for (unsigned e : exponents) {
    exponents_.push_back(0);
    set(exponents_.size() - 1, e);
  }
}

MultiIndex::MultiIndex(std::span<const unsigned> exponents) : exponents_(exponents.size(), 0) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void MultiIndex::set(std::size_t i, unsigned exponent) {
  if (exponent > 0xFFFFu) throw Error(ErrorCode::overflow, "exponent exceeds 65535");
  degree_ = degree_ - exponents_[i] + exponent;
  exponents_[i] = static_cast<Exponent>(exponent);
}

void MultiIndex::increment(std::size_t i, unsigned by) { set(i, exponents_[i] + by); }

MultiIndex& MultiIndex::operator+=(const MultiIndex& rhs) {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    exponents_[i] = static_cast<Exponent>(exponents_[i] + rhs.exponents_[i]);
  }
  degree_ += rhs.degree_;
  return *this;
}

void check_compatible(const SpacePtr& a_space, unsigned a_order, const SpacePtr& b_space,
                      unsigned b_order) {
  if (!same_space(a_space, b_space)) {
    throw Error(ErrorCode::space_mismatch, "series live in different variable spaces");
  }
  if (a_order != b_order) {
    throw Error(ErrorCode::order_mismatch,
                "truncation orders differ: " + std::to_string(a_order) + " vs " +
                    std::to_string(b_order));
  }
}

namespace {

void check_index(const SpacePtr& space, const MultiIndex& index) {
  if (!space) throw Error(ErrorCode::invalid_argument, "series requires a variable space");
  if (index.size() != space->size()) {
    throw Error(ErrorCode::index_length_mismatch,
                "multi-index has " + std::to_string(index.size()) + " entries, space has " +
                    std::to_string(space->size()) + " variables");
  }
}

}  // namespace

// ---------------------------------------------------------------- BasicSeries

template <class S>
BasicSeries<S> BasicSeries<S>::zero(SpacePtr space, unsigned order) {
  if (!space) throw Error(ErrorCode::invalid_argument, "series requires a variable space");
  return BasicSeries(std::move(space), order, {});
}

template <class S>
BasicSeries<S> BasicSeries<S>::constant(SpacePtr space, const S& c, unsigned order) {
  MultiIndex index(space ? space->size() : 0);
  return monomial(std::move(space), index, c, order);
}

template <class S>
BasicSeries<S> BasicSeries<S>::variable(SpacePtr space, const std::string& name, unsigned order) {
  if (!space) throw Error(ErrorCode::invalid_argument, "series requires a variable space");
  auto pos = space->index_of(name);
  if (!pos) throw Error(ErrorCode::unknown_variable, "unknown variable '" + name + "'");
  MultiIndex index(space->size());
  index.set(*pos, 1);
  return monomial(std::move(space), index, ScalarTraits<S>::one(), order);
}

template <class S>
BasicSeries<S> BasicSeries<S>::monomial(SpacePtr space, const MultiIndex& index, const S& c,
                                        unsigned order) {
  check_index(space, index);
  std::vector<Term> terms;
  if (index.total_degree() <= order && !ScalarTraits<S>::is_zero(c)) {
    terms.push_back({index, c});
  }
  return BasicSeries(std::move(space), order, std::move(terms));
}

template <class S>
BasicSeries<S> BasicSeries<S>::from_terms(SpacePtr space, unsigned order, std::vector<Term> terms) {
  if (!space) throw Error(ErrorCode::invalid_argument, "series requires a variable space");
  TermAccumulator<S> acc(space, order);
  for (const auto& t : terms) {
    check_index(space, t.index);
    acc.add(t.index, t.coeff);
  }
  return std::move(acc).finish();
}

template <class S>
S BasicSeries<S>::coefficient(const MultiIndex& index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, const MultiIndex& i) { return GradedLexLess{}(t.index, i); });
  if (it != terms_.end() && it->index == index) return it->coeff;
  return S{};
}

template <class S>
S BasicSeries<S>::constant_term() const {
  if (!terms_.empty() && terms_.front().index.total_degree() == 0) return terms_.front().coeff;
  return S{};
}

template <class S>
int BasicSeries<S>::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().index.total_degree());
}

template <class S>
int BasicSeries<S>::min_degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().index.total_degree());
}

template <class S>
bool BasicSeries<S>::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return ScalarTraits<S>::is_real(t.coeff); });
}

template <class S>
BasicSeries<S> BasicSeries<S>::truncated(unsigned order) const {
  if (order > order_) {
    throw Error(ErrorCode::order_mismatch, "cannot truncate to a higher order; use promoted()");
  }
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    if (t.index.total_degree() > order) break;
    kept.push_back(t);
  }
  return BasicSeries(space_, order, std::move(kept));
}

template <class S>
BasicSeries<S> BasicSeries<S>::promoted(unsigned order) const {
  if (order < order_) return truncated(order);
  return BasicSeries(space_, order, terms_);
}

template <class S>
BasicSeries<S> BasicSeries<S>::degree_slice(unsigned lo, unsigned hi) const {
  std::vector<Term> kept;
  for (const auto& t : terms_) {
    const unsigned deg = t.index.total_degree();
    if (deg >= lo && deg <= hi) kept.push_back(t);
  }
  return BasicSeries(space_, order_, std::move(kept));
}

template <class S>
BasicSeries<S> BasicSeries<S>::scaled(const S& c) const {
  if (ScalarTraits<S>::is_zero(c)) return BasicSeries(space_, order_, {});
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    S v = t.coeff;
    v *= c;
    if (!ScalarTraits<S>::is_zero(v)) out.push_back({t.index, std::move(v)});
  }
  return BasicSeries(space_, order_, std::move(out));
}

template <class S>
BasicSeries<S>& BasicSeries<S>::operator+=(const BasicSeries& rhs) {
  check_compatible(space_, order_, rhs.space_, rhs.order_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  GradedLexLess less;
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && less(a->index, b->index))) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || less(b->index, a->index)) {
      merged.push_back(*b++);
    } else {
      S sum = a->coeff;
      sum += b->coeff;
      if (!ScalarTraits<S>::is_zero(sum)) merged.push_back({a->index, std::move(sum)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

template <class S>
BasicSeries<S>& BasicSeries<S>::operator-=(const BasicSeries& rhs) {
  return *this += rhs.scaled(S(-1));
}

template <class S>
BasicSeries<S>& BasicSeries<S>::operator*=(const BasicSeries& rhs) {
  *this = multiply(*this, rhs);
  return *this;
}

template <class S>
BasicSeries<S> BasicSeries<S>::multiply(const BasicSeries& a, const BasicSeries& b) {
  check_compatible(a.space_, a.order_, b.space_, b.order_);
  TermAccumulator<S> acc(a.space_, a.order_);
  acc.add_product(a, b);
  return std::move(acc).finish();
}

// ------------------------------------------------------------ TermAccumulator

template <class S>
void TermAccumulator<S>::add(const MultiIndex& index, const S& c) {
  if (index.total_degree() > order_ || ScalarTraits<S>::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) it->second += c;
}

template <class S>
void TermAccumulator<S>::add(const BasicSeries<S>& s) {
  for (const auto& t : s.terms()) add(t.index, t.coeff);
}

template <class S>
void TermAccumulator<S>::add_scaled(const BasicSeries<S>& s, const S& c) {
  if (ScalarTraits<S>::is_zero(c)) return;
  for (const auto& t : s.terms()) {
    if (t.index.total_degree() > order_) break;
    auto it = terms_.try_emplace(t.index).first;
    ScalarTraits<S>::add_product(it->second, t.coeff, c);
  }
}

template <class S>
void TermAccumulator<S>::add_product(const BasicSeries<S>& a, const BasicSeries<S>& b) {
  // Both operands are sorted by degree, so the inner loop stops at the first
  // partner that would overshoot the truncation order.
  for (const auto& ta : a.terms()) {
    const unsigned da = ta.index.total_degree();
    if (da > order_) break;
    for (const auto& tb : b.terms()) {
      if (da + tb.index.total_degree() > order_) break;
      auto it = terms_.try_emplace(ta.index + tb.index).first;
      ScalarTraits<S>::add_product(it->second, ta.coeff, tb.coeff);
    }
  }
}

template <class S>
BasicSeries<S> TermAccumulator<S>::finish() && {
  std::vector<typename BasicSeries<S>::Term> out;
  out.reserve(terms_.size());
  for (auto& [index, c] : terms_) {
    if (!ScalarTraits<S>::is_zero(c)) out.push_back({index, std::move(c)});
  }
  terms_.clear();
  return BasicSeries<S>(std::move(space_), order_, std::move(out));
}

// ---------------------------------------------------------- BasicSeriesVector

template <class S>
BasicSeriesVector<S>::BasicSeriesVector(std::vector<BasicSeries<S>> components)
    : components_(std::move(components)) {
  for (std::size_t i = 1; i < components_.size(); ++i) {
    check_compatible(components_[0].space_ptr(), components_[0].order(),
                     components_[i].space_ptr(), components_[i].order());
  }
}

template <class S>
const SpacePtr& BasicSeriesVector<S>::space_ptr() const {
  if (components_.empty()) throw Error(ErrorCode::invalid_argument, "empty series vector");
  return components_.front().space_ptr();
}

template <class S>
unsigned BasicSeriesVector<S>::order() const {
  if (components_.empty()) throw Error(ErrorCode::invalid_argument, "empty series vector");
  return components_.front().order();
}

template class BasicSeries<GaussianRational>;
template class BasicSeries<FloatComplex>;
template class TermAccumulator<GaussianRational>;
template class TermAccumulator<FloatComplex>;
template class BasicSeriesVector<GaussianRational>;
template class BasicSeriesVector<FloatComplex>;

}  // namespace crjet
