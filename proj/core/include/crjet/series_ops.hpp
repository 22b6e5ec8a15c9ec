#pragma once

#include <map>
#include <string>

#include "crjet/series.hpp"

namespace crjet {

/// Variable name -> replacement series.
template <class Scalar>
using Bindings = std::map<std::string, BasicSeries<Scalar>>;

/// Complex conjugation: coefficients are conjugated and every variable is sent
/// to its conjugate (z^a w^b -> ~z^a ~w^b). Over a one-sided space the result
/// lives in the mirror space.
template <class Scalar>
BasicSeries<Scalar> conjugate(const BasicSeries<Scalar>& a);

/// Formal composition target(bindings) truncated at `order`, expressed over
/// `out_space`. Bound series must live in `out_space` at `order` and have zero
/// constant term; unbound variables map to the same-named variable of
/// `out_space`. Requires target.order() >= order.
template <class Scalar>
BasicSeries<Scalar> substitute(const BasicSeries<Scalar>& target, const Bindings<Scalar>& bindings,
                               const SpacePtr& out_space, unsigned order);

/// Same as above with output space and order taken from the (non-empty)
/// bindings. With no bindings the target is returned unchanged.
template <class Scalar>
BasicSeries<Scalar> substitute(const BasicSeries<Scalar>& target, const Bindings<Scalar>& bindings);

/// Rewrites a series over z/w (and optionally ~z/~w) variables in real
/// coordinates: zj = xj + i yj, ~zj = xj - i yj, wj = uj + i vj, ~wj = uj - i vj.
/// The output space must contain the required x/y/u/v names.
template <class Scalar>
BasicSeries<Scalar> realify(const BasicSeries<Scalar>& a, const SpacePtr& out_space);

/// realify into VariableSpace::real_coordinates(family, m, d), where m and d
/// are the largest z and w indices present in the input space.
template <class Scalar>
BasicSeries<Scalar> realify(const BasicSeries<Scalar>& a);

/// Sum over stored indices of max_j |c_j| * t^deg, the truncated weighted
/// l1-norm of a real d-tuple. Throws on t <= 0 or a non-real coefficient.
mpq_class weighted_norm(const ExactSeriesVector& r, const mpq_class& t);

FloatSeries to_float(const ExactSeries& s);

/// Canonical text: graded-lex terms like `3/2*x1^2*y1`, complex coefficients
/// as `(re, im)`, the zero series as `0`.
template <class Scalar>
std::string to_text(const BasicSeries<Scalar>& s);

}  // namespace crjet
