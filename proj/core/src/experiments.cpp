#include <algorithm>
#include <thread>

#include <Eigen/SVD>

#include "crjet/dimension.hpp"
#include "crjet/error.hpp"
#include "crjet/experiments.hpp"

namespace crjet {

namespace {

unsigned worker_count(const ExperimentConfig& config, std::size_t jobs) {
  unsigned threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::max(threads, 1u);
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

// Runs fn(i) for i in [0, count) on a fixed partition; results are written by
// index, so the outcome does not depend on scheduling. The first exception
// (lowest index) is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < count; i += threads) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

MultiIndex conjugate_index(const VariableSpace& space, const MultiIndex& e) {
  MultiIndex out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out.set(space.conjugate_of(i), e[i]);
  return out;
}

ExactSeriesVector replace_component(const ExactSeriesVector& v, std::size_t index,
                                    ExactSeries value) {
  std::vector<ExactSeries> components = v.components();
  components.at(index) = std::move(value);
  return ExactSeriesVector(std::move(components));
}

GraphGerm truncate_germ(const GraphGerm& germ, unsigned k) {
  std::vector<ExactSeries> r;
  for (const auto& c : germ.r) r.push_back(c.truncated(k));
  CrSignature sig = germ.signature;
  sig.k = k;
  return {sig, ExactSeriesVector(std::move(r))};
}

MapJet truncate_map(const MapJet& map, unsigned k) {
  std::vector<ExactSeries> f;
  std::vector<ExactSeries> g;
  for (const auto& c : map.f) f.push_back(c.truncated(k));
  for (const auto& c : map.g) g.push_back(c.truncated(k));
  CrSignature sig = map.signature;
  sig.k = k;
  return {sig, ExactSeriesVector(std::move(f)), ExactSeriesVector(std::move(g))};
}

}  // namespace

std::vector<SourceCoordinate> source_coordinates(const CrSignature& sig) {
  std::vector<SourceCoordinate> out;
  const auto add_complex = [&](SourceCoordinate::Part part, std::size_t count,
                               const std::vector<MultiIndex>& monomials) {
    for (std::size_t c = 0; c < count; ++c) {
      for (const auto& e : monomials) {
        out.push_back({part, c, e, false});
        out.push_back({part, c, e, true});
      }
    }
  };
  add_complex(SourceCoordinate::Part::f, sig.m_prime, enumerate_monomials(sig.n(), 1, sig.k));
  add_complex(SourceCoordinate::Part::g, sig.d, enumerate_monomials(sig.n(), 2, sig.k));

  const auto target = VariableSpace::full(kTargetFamily, sig.m_prime, sig.d);
  const auto model_monomials = enumerate_monomials(target->size(), 2, sig.nu);
  for (std::size_t c = 0; c < sig.d; ++c) {
    std::vector<MultiIndex> seen;
    for (const auto& e : model_monomials) {
      if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
      const MultiIndex partner = conjugate_index(*target, e);
      seen.push_back(partner);
      out.push_back({SourceCoordinate::Part::rho, c, e, false});
      if (!(partner == e)) out.push_back({SourceCoordinate::Part::rho, c, e, true});
    }
  }
  return out;
}

mpq_class coordinate_value(const MapJet& map, const AlgebraicModel& model,
                           const SourceCoordinate& coordinate) {
  const ExactSeriesVector& v = coordinate.part == SourceCoordinate::Part::f   ? map.f
                               : coordinate.part == SourceCoordinate::Part::g ? map.g
                                                                              : model.rho_tilde;
  const GaussianRational c = v[coordinate.component].coefficient(coordinate.index);
  return coordinate.imaginary ? c.imag() : c.real();
}

void perturb(MapJet& map, AlgebraicModel& model, const SourceCoordinate& coordinate,
             const mpq_class& delta) {
  const GaussianRational step =
      coordinate.imaginary ? GaussianRational(0, delta) : GaussianRational(delta);
  const auto bump = [&](const ExactSeries& s, const MultiIndex& e, const GaussianRational& c) {
    return s + ExactSeries::monomial(s.space_ptr(), e, c, s.order());
  };
  switch (coordinate.part) {
    case SourceCoordinate::Part::f:
      map.f = replace_component(map.f, coordinate.component,
                                bump(map.f[coordinate.component], coordinate.index, step));
      break;
    case SourceCoordinate::Part::g:
      map.g = replace_component(map.g, coordinate.component,
                                bump(map.g[coordinate.component], coordinate.index, step));
      break;
    case SourceCoordinate::Part::rho: {
      const ExactSeries& rho = model.rho_tilde[coordinate.component];
      const MultiIndex partner = conjugate_index(rho.space(), coordinate.index);
      ExactSeries bumped = bump(rho, coordinate.index, step);
      if (!(partner == coordinate.index)) {
        bumped = bump(bumped, partner, step.conj());
      } else if (coordinate.imaginary) {
        throw Error(ErrorCode::invalid_argument,
                    "self-conjugate model monomials have no imaginary coordinate");
      }
      model.rho_tilde = replace_component(model.rho_tilde, coordinate.component, std::move(bumped));
      break;
    }
  }
}

std::vector<mpq_class> germ_coordinates(const GraphGerm& germ) {
  const CrSignature& sig = germ.signature;
  const auto monomials = enumerate_monomials(2 * sig.m + sig.d, 2, sig.k);
  std::vector<mpq_class> out;
  out.reserve(monomials.size() * germ.r.size());
  for (const auto& r : germ.r) {
    for (const auto& e : monomials) out.push_back(r.coefficient(e).real());
  }
  return out;
}

// ------------------------------------------------------------ key observation

StabilityReport key_observation_check(const ExperimentConfig& config) {
  config.validate();
  const CrSignature& sig = config.signature;
  sig.validate();
  const unsigned k = sig.k;

  struct TrialOutcome {
    bool stable = true;
    mpq_class delta = 0;
    bool converse_changed = false;
  };
  std::vector<TrialOutcome> outcomes(config.trials);

  parallel_for(config.trials, worker_count(config, config.trials), [&](std::size_t trial) {
    Rng rng(config.seed, trial);
    ExperimentConfig work = config;
    work.signature.k = k + 2;
    const MapJet map = sample_map(work, rng);
    const AlgebraicModel model = sample_model(work, rng);
    AlgebraicModel low_model = model;
    low_model.signature.k = k;
    const GraphGerm base = jet_pullback(truncate_map(map, k), low_model);
    const auto coordinates = source_coordinates(work.signature);

    MapJet high_map = map;
    AlgebraicModel high_model = model;
    for (const auto& c : coordinates) {
      if (c.index.total_degree() <= k) continue;
      const mpq_class delta = rng.rational(config.perturbation_bound);
      if (sgn(delta) != 0) perturb(high_map, high_model, c, delta);
    }
    const GraphGerm high = truncate_germ(jet_pullback(high_map, high_model), k);

    TrialOutcome& outcome = outcomes[trial];
    for (std::size_t j = 0; j < base.r.size(); ++j) {
      const ExactSeries diff = high.r[j] - base.r[j];
      for (const auto& t : diff.terms()) {
        outcome.stable = false;
        const mpq_class magnitude = abs(t.coeff.real()) + abs(t.coeff.imag());
        if (magnitude > outcome.delta) outcome.delta = magnitude;
      }
    }

    if (config.perturbation_bound > 0) {
      std::vector<SourceCoordinate> low;
      for (const auto& c : coordinates) {
        if (c.index.total_degree() <= k) low.push_back(c);
      }
      const auto pick = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(low.size()) - 1));
      MapJet low_map = truncate_map(map, k);
      perturb(low_map, low_model, low[pick], rng.nonzero_rational(config.perturbation_bound));
      outcome.converse_changed = !(jet_pullback(low_map, low_model) == base);
    }
  });

  StabilityReport report;
  report.trials = config.trials;
  for (unsigned t = 0; t < config.trials; ++t) {
    const auto& o = outcomes[t];
    if (!o.stable) {
      ++report.failures;
      report.failed_trials.push_back(t);
    }
    if (o.delta > report.max_delta) report.max_delta = o.delta;
    if (o.converse_changed) ++report.converse_changes;
  }
  return report;
}

void require_stable(const StabilityReport& report, const ExperimentConfig& config) {
  if (report.failures == 0) return;
  throw Error(ErrorCode::stability_violation,
              "order-" + std::to_string(config.signature.k) +
                  " germ changed under high-order perturbation (seed " +
                  std::to_string(config.seed) + ", trial " +
                  std::to_string(report.failed_trials.front()) + ")");
}

// ------------------------------------------------------------------ Jacobian

std::vector<std::vector<double>> pullback_jacobian(const ExperimentConfig& config,
                                                   const MapJet& map,
                                                   const AlgebraicModel& model) {
  config.validate();
  const auto coordinates = source_coordinates(map.signature);
  const mpq_class base_step = rational_from_double(config.fd_step);
  std::vector<std::vector<double>> columns(coordinates.size());

  const auto evaluate = [&](const SourceCoordinate& c, const mpq_class& delta) {
    MapJet m = map;
    AlgebraicModel a = model;
    perturb(m, a, c, delta);
    return germ_coordinates(jet_pullback(m, a));
  };

  parallel_for(coordinates.size(), worker_count(config, coordinates.size()), [&](std::size_t col) {
    const SourceCoordinate& c = coordinates[col];
    const mpq_class value = abs(coordinate_value(map, model, c));
    mpq_class step = base_step * (value > 1 ? value : mpq_class(1));
    for (int attempt = 0;; ++attempt) {
      try {
        const auto plus = evaluate(c, step);
        const auto minus = evaluate(c, -step);
        std::vector<double> column(plus.size());
        const mpq_class denominator = 2 * step;
        for (std::size_t row = 0; row < plus.size(); ++row) {
          const mpq_class quotient = (plus[row] - minus[row]) / denominator;
          column[row] = quotient.get_d();
        }
        columns[col] = std::move(column);
        return;
      } catch (const Error& e) {
        if (attempt >= 1) {
          throw Error(ErrorCode::degenerate_evaluation,
                      "pullback failed at a finite-difference probe: " + std::string(e.what()));
        }
        step /= 2;
      }
    }
  });
  return columns;
}

RankReport jacobian_rank(const ExperimentConfig& config, const MapJet& map,
                         const AlgebraicModel& model, unsigned trial) {
  const auto columns = pullback_jacobian(config, map, model);
  RankReport report;
  report.seed = config.seed;
  report.trial = trial;
  report.jacobian_rows = dim_target(map.signature);
  report.jacobian_cols = columns.size();

  Eigen::MatrixXd jacobian(report.jacobian_rows, report.jacobian_cols);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < report.jacobian_rows; ++r) jacobian(r, c) = columns[c][r];
  }
  const Eigen::VectorXd sigma = Eigen::BDCSVD<Eigen::MatrixXd>(jacobian).singularValues();
  report.singular_values.assign(sigma.data(), sigma.data() + sigma.size());
  report.sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  report.sigma_threshold = config.sv_rel_tol * report.sigma_max;
  report.numerical_rank = static_cast<std::size_t>(
      std::count_if(report.singular_values.begin(), report.singular_values.end(),
                    [&](double s) { return s > 0 && s >= report.sigma_threshold; }));
  return report;
}

std::vector<RankReport> rank_trials(const ExperimentConfig& config) {
  config.validate();
  std::vector<RankReport> reports;
  for (unsigned trial = 0; trial < config.trials; ++trial) {
    Rng rng(config.seed, trial);
    const MapJet map = sample_map(config, rng);
    const AlgebraicModel model = sample_model(config, rng);
    reports.push_back(jacobian_rank(config, map, model, trial));
  }
  return reports;
}

}  // namespace crjet
