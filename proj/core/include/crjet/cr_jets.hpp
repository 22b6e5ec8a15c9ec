#pragma once

#include <optional>

#include "crjet/series.hpp"
#include "crjet/signature.hpp"

namespace crjet {

/// Real algebraic model Im w' + rho_tilde(z', ~z', w', ~w') = 0.
///
/// `rho_tilde` holds d real polynomials over the target space with terms of
/// degree 2..nu only, stored at a truncation order >= nu.
struct AlgebraicModel {
  CrSignature signature;
  ExactSeriesVector rho_tilde;
};

/// Holomorphic map jet F = (f, g) : (C^n, 0) -> (C^n', 0) truncated at k;
/// components are series over the holomorphic source space (z, w).
struct MapJet {
  CrSignature signature;
  ExactSeriesVector f;  ///< m' components
  ExactSeriesVector g;  ///< d components

  /// g = w + O(2): the w-linear part of g is the identity and the z-linear
  /// part vanishes.
  bool is_normalized() const;
};

/// Graph form v = r(x, y, u): d real series over the graph space with terms
/// of degree 2..k only.
struct GraphGerm {
  CrSignature signature;
  ExactSeriesVector r;

  friend bool operator==(const GraphGerm&, const GraphGerm&) = default;
};

struct PullbackResult {
  ExactSeriesVector defining;  ///< v - r'(x, y, u, v)
  GraphGerm germ;
  unsigned iterations_used = 0;
};

struct GraphSolution {
  ExactSeriesVector r;
  unsigned iterations_used = 0;
};

/// Returns the model if rho_tilde is real, O(2), of degree <= nu, and lives in
/// the target space of its signature. Throws NonRealModel, HasLowOrderTerms,
/// DegreeExceeded, or a structural error otherwise.
AlgebraicModel validate_model(const AlgebraicModel& model);

/// Structural checks on a map jet: component counts, space, order k, F(0) = 0.
MapJet validate_map(const MapJet& map);

/// Structural checks on a germ: component count, graph space, order k, real
/// coefficients, no constant or linear terms.
GraphGerm validate_germ(const GraphGerm& germ);

/// Whether dF(0) has full rank n (the map jet is an immersion at 0).
bool has_full_rank_differential(const MapJet& map);

/// Rescales g = Bw + g~ to g* = B^-1 g and the model to
/// rho*(z', ~z', w', ~w') = B^-1 rho(z', ~z', Bw', B~w'), which keeps the
/// preimage germ unchanged. B must be real and invertible and the z-linear
/// part of g must vanish.
struct NormalizedPair {
  MapJet map;
  AlgebraicModel model;
};
NormalizedPair normalize_linear_part(const MapJet& map, const AlgebraicModel& model);

/// Im g + rho_tilde(f, ~f, g, ~g) in real coordinates (x, y, u, v), for a
/// normalized map. The result has the shape v - r'(x, y, u, v), r' = O(2).
ExactSeriesVector pullback_defining_series(const MapJet& map, const AlgebraicModel& model);

/// Solves v = r'(x, y, u, v) by the iteration v^0 = 0, v^{j+1} = r'(x, y, u, v^j)
/// at truncation order k, stopping at the first repeated iterate.
/// `iterations_used` is the j with v^{j+1} = v^j; at most k+1 iterations are
/// attempted.
GraphSolution graph_iteration(const ExactSeriesVector& defining, unsigned k);

/// normalize_linear_part -> pullback_defining_series -> graph_iteration.
PullbackResult jet_pullback_detailed(const MapJet& map, const AlgebraicModel& model);
GraphGerm jet_pullback(const MapJet& map, const AlgebraicModel& model);

/// True iff jet_pullback(map, model) equals `germ` at order k.
bool is_jet_preimage(const MapJet& map, const AlgebraicModel& model, const GraphGerm& germ);

}  // namespace crjet
