#include "crjet/series_ops.hpp"

#include <algorithm>

#include "crjet/error.hpp"

namespace crjet {

template <class S>
BasicSeries<S> conjugate(const BasicSeries<S>& a) {
  const SpacePtr out = a.space().conjugate_space(a.space_ptr());
  TermAccumulator<S> acc(out, a.order());
  const bool closed = a.space().is_closed();
  for (const auto& t : a.terms()) {
    if (!closed) {
      acc.add(t.index, ScalarTraits<S>::conj(t.coeff));
      continue;
    }
    MultiIndex swapped(t.index.size());
    for (std::size_t i = 0; i < t.index.size(); ++i) {
      swapped.set(a.space().conjugate_of(i), t.index[i]);
    }
    acc.add(swapped, ScalarTraits<S>::conj(t.coeff));
  }
  return std::move(acc).finish();
}

namespace {

// How one target variable is rewritten during substitution.
template <class S>
struct Slot {
  enum class Kind { monomial, zero, general } kind = Kind::monomial;
  MultiIndex mono;   // kind == monomial
  S coeff{1};        // kind == monomial
  bool unit = true;  // coeff == 1
  std::size_t general = 0;
};

}  // namespace

template <class S>
BasicSeries<S> substitute(const BasicSeries<S>& target, const Bindings<S>& bindings,
                          const SpacePtr& out_space, unsigned order) {
  if (!out_space) throw Error(ErrorCode::invalid_argument, "substitute needs an output space");
  if (target.order() < order) {
    throw Error(ErrorCode::order_mismatch,
                "target truncated at " + std::to_string(target.order()) +
                    " cannot be composed to order " + std::to_string(order));
  }
  const VariableSpace& in = target.space();
  const VariableSpace& out = *out_space;

  for (const auto& [name, value] : bindings) {
    if (!in.index_of(name)) {
      throw Error(ErrorCode::unknown_variable, "binding for unknown variable '" + name + "'");
    }
    if (!same_space(value.space_ptr(), out_space)) {
      throw Error(ErrorCode::space_mismatch, "binding for '" + name + "' lives in another space");
    }
    if (value.order() != order) {
      throw Error(ErrorCode::order_mismatch, "binding for '" + name + "' has a different order");
    }
    if (!ScalarTraits<S>::is_zero(value.constant_term())) {
      throw Error(ErrorCode::nonzero_constant_binding,
                  "binding for '" + name + "' has a nonzero constant term");
    }
  }

  std::vector<Slot<S>> slots(in.size());
  std::vector<const BasicSeries<S>*> generals;
  std::vector<unsigned> general_min_degree;
  for (std::size_t i = 0; i < in.size(); ++i) {
    Slot<S>& slot = slots[i];
    auto bound = bindings.find(in.name(i));
    if (bound == bindings.end()) {
      auto j = out.index_of(in.name(i));
      if (!j) {
        throw Error(ErrorCode::unknown_variable,
                    "unbound variable '" + in.name(i) + "' is missing from the output space");
      }
      slot.mono = MultiIndex(out.size());
      slot.mono.set(*j, 1);
      continue;
    }
    const BasicSeries<S>& value = bound->second;
    if (value.is_zero()) {
      slot.kind = Slot<S>::Kind::zero;
    } else if (value.size() == 1) {
      slot.mono = value.terms()[0].index;
      slot.coeff = value.terms()[0].coeff;
      slot.unit = slot.coeff == ScalarTraits<S>::one();
    } else {
      slot.kind = Slot<S>::Kind::general;
      slot.general = generals.size();
      generals.push_back(&value);
      general_min_degree.push_back(static_cast<unsigned>(value.min_degree()));
    }
  }

  // Group target terms by their exponents on the general variables; the
  // monomially-bound part of each term is pure exponent arithmetic.
  std::map<MultiIndex, TermAccumulator<S>, GradedLexLess> groups;
  for (const auto& t : target.terms()) {
    if (t.index.total_degree() > order) break;
    MultiIndex mono(out.size());
    MultiIndex key(generals.size());
    S c = t.coeff;
    unsigned lower_bound = 0;
    bool vanishes = false;
    for (std::size_t i = 0; i < t.index.size() && !vanishes; ++i) {
      const unsigned e = t.index[i];
      if (e == 0) continue;
      const Slot<S>& slot = slots[i];
      switch (slot.kind) {
        case Slot<S>::Kind::zero:
          vanishes = true;
          break;
        case Slot<S>::Kind::monomial:
          for (std::size_t j = 0; j < slot.mono.size(); ++j) {
            if (slot.mono[j] != 0) mono.increment(j, slot.mono[j] * e);
          }
          if (!slot.unit) c *= scalar_pow(slot.coeff, e);
          break;
        case Slot<S>::Kind::general:
          key.set(slot.general, e);
          lower_bound += e * general_min_degree[slot.general];
          break;
      }
    }
    if (vanishes || mono.total_degree() + lower_bound > order) continue;
    auto it = groups.try_emplace(key, out_space, order).first;
    it->second.add(mono, c);
  }

  // Products of powers of the general bindings, memoised on their exponent
  // key; each new key costs one multiplication by a single binding.
  std::map<MultiIndex, BasicSeries<S>, GradedLexLess> memo;
  auto power_product = [&](auto&& self, const MultiIndex& key) -> const BasicSeries<S>& {
    auto found = memo.find(key);
    if (found != memo.end()) return found->second;
    if (key.total_degree() == 0) {
      return memo.emplace(key, BasicSeries<S>::constant(out_space, ScalarTraits<S>::one(), order))
          .first->second;
    }
    std::size_t last = key.size();
    while (key[last - 1] == 0) --last;
    MultiIndex prev = key;
    prev.set(last - 1, key[last - 1] - 1);
    BasicSeries<S> product = self(self, prev) * *generals[last - 1];
    return memo.emplace(key, std::move(product)).first->second;
  };

  TermAccumulator<S> result(out_space, order);
  for (auto& [key, acc] : groups) {
    const BasicSeries<S> coefficient = std::move(acc).finish();
    if (coefficient.is_zero()) continue;
    if (key.total_degree() == 0) {
      result.add(coefficient);
      continue;
    }
    const BasicSeries<S>& powers = power_product(power_product, key);
    if (powers.is_zero()) continue;
    if (coefficient.size() == 1 && coefficient.min_degree() == 0) {
      result.add_scaled(powers, coefficient.terms()[0].coeff);
    } else {
      result.add_product(coefficient, powers);
    }
  }
  return std::move(result).finish();
}

template <class S>
BasicSeries<S> substitute(const BasicSeries<S>& target, const Bindings<S>& bindings) {
  if (bindings.empty()) return target;
  const auto& first = bindings.begin()->second;
  return substitute(target, bindings, first.space_ptr(), first.order());
}

namespace {

struct ComplexCoordinate {
  char stem;        // 'z' or 'w'
  std::string index;
  bool conjugated;
};

std::optional<ComplexCoordinate> parse_complex_name(const std::string& name) {
  std::string body = name;
  bool conj = false;
  if (!body.empty() && body[0] == '~') {
    conj = true;
    body = body.substr(1);
  }
  if (body.size() < 2 || (body[0] != 'z' && body[0] != 'w')) return std::nullopt;
  const std::string digits = body.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  return ComplexCoordinate{body[0], digits, conj};
}

// (re + i*im)^a (re - i*im)^b expanded in powers of im.
template <class S>
std::vector<S> pair_expansion(unsigned a, unsigned b) {
  std::vector<S> out{ScalarTraits<S>::one()};
  auto times = [&out](const S& im_coeff) {
    std::vector<S> next(out.size() + 1);
    for (std::size_t s = 0; s < out.size(); ++s) {
      next[s] += out[s];
      next[s + 1] += out[s] * im_coeff;
    }
    out = std::move(next);
  };
  for (unsigned t = 0; t < a; ++t) times(S(0, 1));
  for (unsigned t = 0; t < b; ++t) times(S(0, -1));
  return out;
}

}  // namespace

template <class S>
BasicSeries<S> realify(const BasicSeries<S>& a, const SpacePtr& out_space) {
  const VariableSpace& in = a.space();
  const VariableSpace& out = *out_space;
  struct Pair {
    std::size_t re = 0;
    std::size_t im = 0;
    int holo = -1;
    int anti = -1;
  };
  std::vector<Pair> pairs;
  std::map<std::string, std::size_t> pair_of;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const auto coord = parse_complex_name(in.name(i));
    const bool expected_conj = in.kind(i) == VariableKind::antiholomorphic;
    if (in.kind(i) == VariableKind::real || !coord || coord->conjugated != expected_conj) {
      throw Error(ErrorCode::unpaired_variable,
                  "variable '" + in.name(i) + "' is not a z/w coordinate or its conjugate");
    }
    const std::string re_name = std::string(1, coord->stem == 'z' ? 'x' : 'u') + coord->index;
    const std::string im_name = std::string(1, coord->stem == 'z' ? 'y' : 'v') + coord->index;
    auto [it, inserted] = pair_of.try_emplace(re_name, pairs.size());
    if (inserted) {
      const auto re = out.index_of(re_name);
      const auto im = out.index_of(im_name);
      if (!re || !im) {
        throw Error(ErrorCode::unknown_variable,
                    "output space lacks '" + re_name + "' or '" + im_name + "'");
      }
      pairs.push_back({*re, *im});
    }
    (coord->conjugated ? pairs[it->second].anti : pairs[it->second].holo) = static_cast<int>(i);
  }

  std::map<std::pair<unsigned, unsigned>, std::vector<S>> expansions;
  auto expansion = [&](unsigned p, unsigned q) -> const std::vector<S>& {
    auto it = expansions.find({p, q});
    if (it == expansions.end()) it = expansions.emplace(std::pair{p, q}, pair_expansion<S>(p, q)).first;
    return it->second;
  };

  TermAccumulator<S> acc(out_space, a.order());
  std::vector<const std::vector<S>*> factors(pairs.size());
  std::vector<unsigned> degrees(pairs.size());
  std::vector<std::size_t> choice(pairs.size());
  for (const auto& t : a.terms()) {
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const unsigned e = pairs[p].holo >= 0 ? t.index[pairs[p].holo] : 0;
      const unsigned f = pairs[p].anti >= 0 ? t.index[pairs[p].anti] : 0;
      degrees[p] = e + f;
      factors[p] = &expansion(e, f);
    }
    // Odometer over the im-power chosen in each pair.
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      S c = t.coeff;
      bool zero = false;
      MultiIndex index(out.size());
      for (std::size_t p = 0; p < pairs.size() && !zero; ++p) {
        const S& f = (*factors[p])[choice[p]];
        if (ScalarTraits<S>::is_zero(f)) {
          zero = true;
          break;
        }
        if (!(f == ScalarTraits<S>::one())) c *= f;
        if (degrees[p] > choice[p]) index.increment(pairs[p].re, degrees[p] - choice[p]);
        if (choice[p] > 0) index.increment(pairs[p].im, choice[p]);
      }
      if (!zero) acc.add(index, c);
      std::size_t p = 0;
      while (p < pairs.size() && ++choice[p] > degrees[p]) choice[p++] = 0;
      if (p == pairs.size()) break;
    }
  }
  return std::move(acc).finish();
}

template <class S>
BasicSeries<S> realify(const BasicSeries<S>& a) {
  std::size_t m = 0;
  std::size_t d = 0;
  for (const auto& name : a.space().names()) {
    const auto coord = parse_complex_name(name);
    if (!coord) {
      throw Error(ErrorCode::unpaired_variable, "variable '" + name + "' is not a z/w coordinate");
    }
    const std::size_t j = std::stoul(coord->index);
    (coord->stem == 'z' ? m : d) = std::max(coord->stem == 'z' ? m : d, j);
  }
  return realify(a, VariableSpace::real_coordinates(a.space().family(), m, d));
}

mpq_class weighted_norm(const ExactSeriesVector& r, const mpq_class& t) {
  if (sgn(t) <= 0) throw Error(ErrorCode::invalid_argument, "weight t must be positive");
  std::map<MultiIndex, mpq_class, GradedLexLess> largest;
  for (const auto& component : r) {
    for (const auto& term : component.terms()) {
      if (!term.coeff.is_real()) {
        throw Error(ErrorCode::non_real_coefficient, "weighted norm needs real coefficients");
      }
      mpq_class magnitude = abs(term.coeff.real());
      auto [it, inserted] = largest.try_emplace(term.index, magnitude);
      if (!inserted && it->second < magnitude) it->second = magnitude;
    }
  }
  mpq_class total = 0;
  for (const auto& [index, magnitude] : largest) {
    mpq_class weight = 1;
    for (unsigned i = 0; i < index.total_degree(); ++i) weight *= t;
    total += magnitude * weight;
  }
  return total;
}

FloatSeries to_float(const ExactSeries& s) {
  std::vector<FloatSeries::Term> terms;
  terms.reserve(s.size());
  for (const auto& t : s.terms()) terms.push_back({t.index, to_float(t.coeff)});
  return FloatSeries::from_terms(s.space_ptr(), s.order(), std::move(terms));
}

#define CRJET_INSTANTIATE_OPS(S)                                                              \
  template BasicSeries<S> conjugate(const BasicSeries<S>&);                                   \
  template BasicSeries<S> substitute(const BasicSeries<S>&, const Bindings<S>&,               \
                                     const SpacePtr&, unsigned);                              \
  template BasicSeries<S> substitute(const BasicSeries<S>&, const Bindings<S>&);              \
  template BasicSeries<S> realify(const BasicSeries<S>&, const SpacePtr&);                    \
  template BasicSeries<S> realify(const BasicSeries<S>&);

CRJET_INSTANTIATE_OPS(GaussianRational)
CRJET_INSTANTIATE_OPS(FloatComplex)

#undef CRJET_INSTANTIATE_OPS

}  // namespace crjet
