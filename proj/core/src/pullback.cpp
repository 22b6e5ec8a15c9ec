#include "crjet/cr_jets.hpp"
#include "crjet/error.hpp"
#include "crjet/series_ops.hpp"
#include "exact_matrix.hpp"

namespace crjet {

namespace {

MultiIndex unit_index(std::size_t size, std::size_t i) {
  MultiIndex e(size);
  e.set(i, 1);
  return e;
}

void check_same_signature(const MapJet& map, const AlgebraicModel& model) {
  if (!(map.signature == model.signature)) {
    throw Error(ErrorCode::signature_mismatch, "map " + map.signature.to_string() +
                                                   " and model " + model.signature.to_string() +
                                                   " disagree");
  }
}

// sum_j m[i][j] * v[j]
ExactSeriesVector apply_matrix(const detail::RationalMatrix& m, const ExactSeriesVector& v) {
  std::vector<ExactSeries> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    TermAccumulator<GaussianRational> acc(v.space_ptr(), v.order());
    for (std::size_t j = 0; j < v.size(); ++j) acc.add_scaled(v[j], GaussianRational(m[i][j]));
    out.push_back(std::move(acc).finish());
  }
  return ExactSeriesVector(std::move(out));
}

// Holomorphic-space series re-expressed over the full (z, ~z, w, ~w) space.
ExactSeries embed(const ExactSeries& s, const SpacePtr& full) {
  return substitute(s, {}, full, s.order());
}

}  // namespace

NormalizedPair normalize_linear_part(const MapJet& map, const AlgebraicModel& model) {
  validate_map(map);
  validate_model(model);
  check_same_signature(map, model);
  const CrSignature& sig = map.signature;
  const std::size_t n = sig.n();
  const std::size_t d = sig.d;

  detail::RationalMatrix b(d, std::vector<mpq_class>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t v = 0; v < sig.m; ++v) {
      if (!map.g[i].coefficient(unit_index(n, v)).is_zero()) {
        throw Error(ErrorCode::nonzero_z_linear_part, "g has a nonzero linear term in z");
      }
    }
    for (std::size_t j = 0; j < d; ++j) {
      const GaussianRational c = map.g[i].coefficient(unit_index(n, sig.m + j));
      if (!c.is_real()) {
        throw Error(ErrorCode::complex_linear_part, "linear part of g in w is not real");
      }
      b[i][j] = c.real();
    }
  }
  const auto b_inv = detail::inverse(b);
  if (!b_inv) {
    throw Error(ErrorCode::singular_linear_part,
                "linear part of g in w is singular: the map is not transverse to the model");
  }
  if (detail::is_identity(b)) return {map, model};

  MapJet normalized = map;
  normalized.g = apply_matrix(*b_inv, map.g);

  // rho_tilde(z', ~z', Bw', B~w'), then B^-1 on the left. Im(Bw') = B Im(w')
  // because B is real, so the Im w' part of the model is unchanged.
  const auto spaces = CoordinateSpaces::for_signature(sig);
  const SpacePtr& target = spaces.target_full;
  const unsigned order = model.rho_tilde.order();
  Bindings<GaussianRational> bindings;
  for (std::size_t i = 0; i < d; ++i) {
    TermAccumulator<GaussianRational> w_row(target, order);
    TermAccumulator<GaussianRational> wbar_row(target, order);
    for (std::size_t j = 0; j < d; ++j) {
      const std::string w = "w" + std::to_string(j + 1);
      w_row.add_scaled(ExactSeries::variable(target, w, order), GaussianRational(b[i][j]));
      wbar_row.add_scaled(ExactSeries::variable(target, "~" + w, order), GaussianRational(b[i][j]));
    }
    const std::string w = "w" + std::to_string(i + 1);
    bindings.emplace(w, std::move(w_row).finish());
    bindings.emplace("~" + w, std::move(wbar_row).finish());
  }
  std::vector<ExactSeries> stretched;
  for (const auto& rho : model.rho_tilde) {
    stretched.push_back(substitute(rho, bindings, target, order));
  }
  AlgebraicModel rescaled = model;
  rescaled.rho_tilde = apply_matrix(*b_inv, ExactSeriesVector(std::move(stretched)));
  return {std::move(normalized), std::move(rescaled)};
}

ExactSeriesVector pullback_defining_series(const MapJet& map, const AlgebraicModel& model) {
  validate_map(map);
  validate_model(model);
  check_same_signature(map, model);
  if (!map.is_normalized()) {
    throw Error(ErrorCode::not_normalized, "pullback needs g = w + O(2)");
  }
  const CrSignature& sig = map.signature;
  const unsigned k = sig.k;
  const auto spaces = CoordinateSpaces::for_signature(sig);

  Bindings<GaussianRational> bindings;
  for (std::size_t j = 0; j < sig.m_prime; ++j) {
    const std::string z = "z" + std::to_string(j + 1);
    bindings.emplace(z, embed(map.f[j], spaces.source_full));
    bindings.emplace("~" + z, embed(conjugate(map.f[j]), spaces.source_full));
  }
  std::vector<ExactSeries> g_full;
  std::vector<ExactSeries> g_bar_full;
  for (std::size_t j = 0; j < sig.d; ++j) {
    const std::string w = "w" + std::to_string(j + 1);
    g_full.push_back(embed(map.g[j], spaces.source_full));
    g_bar_full.push_back(embed(conjugate(map.g[j]), spaces.source_full));
    bindings.emplace(w, g_full.back());
    bindings.emplace("~" + w, g_bar_full.back());
  }

  const GaussianRational minus_half_i(mpq_class(0), mpq_class(-1, 2));
  std::vector<ExactSeries> defining;
  for (std::size_t j = 0; j < sig.d; ++j) {
    const ExactSeries rho = model.rho_tilde[j].order() < k ? model.rho_tilde[j].promoted(k)
                                                            : model.rho_tilde[j];
    ExactSeries total = (g_full[j] - g_bar_full[j]).scaled(minus_half_i);
    total += substitute(rho, bindings, spaces.source_full, k);
    ExactSeries real_form = realify(total, spaces.source_real);
    if (!real_form.is_real()) {
      throw Error(ErrorCode::internal_reality_failure,
                  "pullback of a real model produced non-real coefficients");
    }
    defining.push_back(std::move(real_form));
  }
  return ExactSeriesVector(std::move(defining));
}

GraphSolution graph_iteration(const ExactSeriesVector& defining, unsigned k) {
  if (defining.size() == 0) throw Error(ErrorCode::not_in_graph_shape, "empty defining tuple");
  const VariableSpace& space = defining[0].space();
  const std::size_t d = defining.size();
  if (space.size() < 2 * d || (space.size() - 2 * d) % 2 != 0) {
    throw Error(ErrorCode::not_in_graph_shape, "defining series must live in (x, y, u, v)");
  }
  const std::size_t m = (space.size() - 2 * d) / 2;
  const SpacePtr expected = VariableSpace::real_coordinates(space.family(), m, d);
  if (!same_space(defining.space_ptr(), expected)) {
    throw Error(ErrorCode::not_in_graph_shape, "defining series must live in (x, y, u, v)");
  }
  if (k > defining.order()) {
    throw Error(ErrorCode::order_mismatch, "cannot solve beyond the defining series' order");
  }
  const SpacePtr graph = VariableSpace::graph(space.family(), m, d);
  const std::size_t vars = space.size();

  std::vector<ExactSeries> r_prime;
  for (std::size_t j = 0; j < d; ++j) {
    const ExactSeries rho = defining[j].truncated(k);
    if (!rho.is_real()) throw Error(ErrorCode::not_in_graph_shape, "defining series is not real");
    if (!rho.constant_term().is_zero()) {
      throw Error(ErrorCode::not_in_graph_shape, "defining series has a constant term");
    }
    for (std::size_t v = 0; v < vars; ++v) {
      const GaussianRational expected_coeff = (v == vars - d + j) ? 1 : 0;
      if (!(rho.coefficient(unit_index(vars, v)) == expected_coeff)) {
        throw Error(ErrorCode::not_in_graph_shape,
                    "linear part of defining component " + std::to_string(j + 1) + " is not v" +
                        std::to_string(j + 1));
      }
    }
    r_prime.push_back(ExactSeries::variable(rho.space_ptr(), "v" + std::to_string(j + 1), k) - rho);
  }

  std::vector<ExactSeries> current(d, ExactSeries::zero(graph, k));
  for (unsigned iteration = 0; iteration <= k + 1; ++iteration) {
    Bindings<GaussianRational> bindings;
    for (std::size_t j = 0; j < d; ++j) bindings.emplace("v" + std::to_string(j + 1), current[j]);
    std::vector<ExactSeries> next;
    for (std::size_t j = 0; j < d; ++j) next.push_back(substitute(r_prime[j], bindings, graph, k));
    if (next == current) return {ExactSeriesVector(std::move(current)), iteration};
    current = std::move(next);
  }
  throw Error(ErrorCode::no_stabilization,
              "graph iteration did not stabilise within k+1 steps");
}

PullbackResult jet_pullback_detailed(const MapJet& map, const AlgebraicModel& model) {
  const NormalizedPair normalized = normalize_linear_part(map, model);
  ExactSeriesVector defining = pullback_defining_series(normalized.map, normalized.model);
  GraphSolution solution = graph_iteration(defining, map.signature.k);
  GraphGerm germ{map.signature, std::move(solution.r)};
  return {std::move(defining), std::move(germ), solution.iterations_used};
}

GraphGerm jet_pullback(const MapJet& map, const AlgebraicModel& model) {
  return jet_pullback_detailed(map, model).germ;
}

bool is_jet_preimage(const MapJet& map, const AlgebraicModel& model, const GraphGerm& germ) {
  if (!(germ.signature == map.signature)) {
    throw Error(ErrorCode::signature_mismatch, "germ signature differs from the map's");
  }
  return jet_pullback(map, model).r == germ.r;
}

}  // namespace crjet
