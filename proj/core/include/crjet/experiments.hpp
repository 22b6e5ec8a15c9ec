#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "crjet/cr_jets.hpp"

namespace crjet {

struct ExperimentConfig {
  CrSignature signature;
  std::uint64_t seed = 0;
  unsigned trials = 1;
  /// Sampled rationals p/q have |p| <= bound and 1 <= q <= max(bound, 1).
  unsigned coefficient_bound = 5;
  /// Bound for the random perturbations of the key-observation check; 0
  /// disables them.
  unsigned perturbation_bound = 5;
  /// Probability that a non-linear coefficient is drawn nonzero.
  double density = 1.0;
  double fd_step = 1e-6;
  double sv_rel_tol = 1e-8;
  /// Worker threads for Jacobian columns and trials; 0 picks the hardware count.
  unsigned threads = 0;

  /// trials >= 1, fd_step > 0, sv_rel_tol in (0, 1), density in (0, 1].
  void validate() const;
};

/// Deterministic 64-bit generator; draws use plain modular reduction so that
/// sequences do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  double unit();
  mpq_class rational(unsigned bound);
  /// Like rational() but never zero (bound is raised to at least 1).
  mpq_class nonzero_rational(unsigned bound);

 private:
  std::mt19937_64 engine_;
};

/// All exponent vectors over `vars` variables with total degree in [lo, hi],
/// in graded-lex order.
std::vector<MultiIndex> enumerate_monomials(std::size_t vars, unsigned lo, unsigned hi);

/// Random normalized map jet at the config's signature: f has every monomial
/// of degree 1..k, g = w + (degree 2..k). A draw whose f has zero linear part
/// is rejected and the linear part redrawn.
MapJet sample_map(const ExperimentConfig& config, Rng& rng);
MapJet sample_map(const ExperimentConfig& config);

/// Random real model of degree 2..nu, drawn on the conjugation-orbit basis
/// (a monomial and its conjugate get conjugate coefficients).
AlgebraicModel sample_model(const ExperimentConfig& config, Rng& rng);
AlgebraicModel sample_model(const ExperimentConfig& config);

/// One real coordinate of the source space H_k x A of P_k.
struct SourceCoordinate {
  enum class Part { f, g, rho } part = Part::f;
  std::size_t component = 0;
  MultiIndex index;     ///< for rho: the orbit representative
  bool imaginary = false;
};

/// Ordered real coordinates of (F, rho_tilde): f (degree 1..k), g~ (2..k),
/// then rho_tilde (2..nu, one per self-conjugate monomial, two per orbit pair).
std::vector<SourceCoordinate> source_coordinates(const CrSignature& signature);

mpq_class coordinate_value(const MapJet& map, const AlgebraicModel& model,
                           const SourceCoordinate& coordinate);

/// Adds `delta` to one real coordinate (keeping the model real).
void perturb(MapJet& map, AlgebraicModel& model, const SourceCoordinate& coordinate,
             const mpq_class& delta);

/// Coefficients of a germ in the order of its coordinates on R_k: per
/// component, every monomial of degree 2..k over (x, y, u) in graded-lex order.
std::vector<mpq_class> germ_coordinates(const GraphGerm& germ);

struct StabilityReport {
  unsigned trials = 0;
  unsigned failures = 0;
  std::vector<unsigned> failed_trials;
  /// Largest |coefficient change| at order <= k caused by high-order
  /// perturbations; exactly zero when the key observation holds.
  mpq_class max_delta = 0;
  /// Trials in which a single degree <= k perturbation changed the germ.
  unsigned converse_changes = 0;
};

/// Samples (F, model) at working order k+2. The order-k pullback of the k-jet
/// of F is compared bit for bit with the order-k truncation of the order-(k+2)
/// pullback after every coefficient of degree > k has been perturbed.
StabilityReport key_observation_check(const ExperimentConfig& config);

/// Throws Error(stability_violation) naming the first failing trial.
void require_stable(const StabilityReport& report, const ExperimentConfig& config);

struct RankReport {
  std::uint64_t seed = 0;
  unsigned trial = 0;
  std::size_t jacobian_rows = 0;  ///< dim R_k
  std::size_t jacobian_cols = 0;  ///< dim H_k + dim A
  std::size_t numerical_rank = 0;
  double sigma_max = 0;
  double sigma_threshold = 0;
  std::vector<double> singular_values;
};

/// Central-difference Jacobian of P_k at (map, model). Every evaluation runs
/// the exact pipeline; the difference quotient is formed exactly and then
/// converted to double.
std::vector<std::vector<double>> pullback_jacobian(const ExperimentConfig& config,
                                                   const MapJet& map,
                                                   const AlgebraicModel& model);

RankReport jacobian_rank(const ExperimentConfig& config, const MapJet& map,
                         const AlgebraicModel& model, unsigned trial = 0);

/// jacobian_rank at `config.trials` sampled points.
std::vector<RankReport> rank_trials(const ExperimentConfig& config);

}  // namespace crjet
