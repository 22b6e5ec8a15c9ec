#include <gtest/gtest.h>

#include <algorithm>

#include "crjet/dimension.hpp"
#include "crjet/error.hpp"
#include "crjet/experiments.hpp"
#include "test_support.hpp"

namespace crjet {
namespace {

TEST(Rng, StreamsAreDeterministicAndDistinct) {
  Rng a(42, 3);
  Rng b(42, 3);
  Rng c(42, 4);
  std::vector<std::uint64_t> xs;
  std::vector<std::uint64_t> ys;
  std::vector<std::uint64_t> zs;
  for (int i = 0; i < 8; ++i) {
    xs.push_back(a.next());
    ys.push_back(b.next());
    zs.push_back(c.next());
  }
  EXPECT_EQ(xs, ys);
  EXPECT_NE(xs, zs);
}

TEST(Rng, RationalsRespectTheBound) {
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const mpq_class r = rng.rational(3);
    EXPECT_LE(abs(r.get_num()), 3);
    EXPECT_LE(r.get_den(), 3);
    EXPECT_NE(rng.nonzero_rational(0), 0);
    const auto n = rng.integer(-2, 5);
    EXPECT_GE(n, -2);
    EXPECT_LE(n, 5);
  }
}

TEST(EnumerateMonomials, GradedLexAndComplete) {
  const auto all = enumerate_monomials(3, 0, 4);
  EXPECT_EQ(all.size(), binomial(7, 3));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), GradedLexLess{}));
  EXPECT_TRUE(std::adjacent_find(all.begin(), all.end()) == all.end());
  const auto two = enumerate_monomials(2, 2, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0], (MultiIndex{2, 0}));
  EXPECT_EQ(two[1], (MultiIndex{1, 1}));
  EXPECT_EQ(two[2], (MultiIndex{0, 2}));
}

TEST(Sampling, MapsAreNormalizedAndModelsValid) {
  for (const CrSignature sig : {CrSignature{1, 1, 1, 2, 3}, CrSignature{2, 1, 3, 3, 2},
                                CrSignature{1, 2, 1, 2, 4}}) {
    ExperimentConfig config;
    config.signature = sig;
    config.seed = 8;
    const MapJet map = sample_map(config);
    EXPECT_TRUE(map.is_normalized());
    EXPECT_NO_THROW(validate_map(map));
    EXPECT_EQ(map.f.size(), sig.m_prime);
    EXPECT_EQ(map.g.size(), sig.d);
    const AlgebraicModel model = sample_model(config);
    EXPECT_NO_THROW(validate_model(model));
    EXPECT_EQ(model.rho_tilde.order(), std::max(sig.nu, sig.k));
  }
}

TEST(Sampling, ZeroBoundStillGivesATransverseMap) {
  ExperimentConfig config;
  config.signature = {1, 1, 1, 2, 3};
  config.coefficient_bound = 0;
  const MapJet map = sample_map(config);
  EXPECT_NO_THROW(jet_pullback(map, sample_model(config)));
  EXPECT_FALSE(map.f[0].is_zero());
}

TEST(SourceCoordinates, CountMatchesDimensions) {
  for (const CrSignature sig : {CrSignature{1, 1, 1, 2, 10}, CrSignature{2, 1, 2, 3, 4},
                                CrSignature{1, 2, 2, 2, 3}}) {
    EXPECT_EQ(source_coordinates(sig).size(), dim_source_maps(sig) + dim_source_models(sig));
  }
}

TEST(SourceCoordinates, PerturbMovesExactlyOneCoordinate) {
  ExperimentConfig config;
  config.signature = {1, 1, 1, 2, 3};
  const MapJet map = sample_map(config);
  const AlgebraicModel model = sample_model(config);
  const auto coordinates = source_coordinates(config.signature);
  for (std::size_t i = 0; i < coordinates.size(); i += 3) {
    MapJet m = map;
    AlgebraicModel a = model;
    perturb(m, a, coordinates[i], mpq_class(1, 7));
    EXPECT_NO_THROW(validate_model(a));
    for (std::size_t j = 0; j < coordinates.size(); ++j) {
      const mpq_class before = coordinate_value(map, model, coordinates[j]);
      const mpq_class after = coordinate_value(m, a, coordinates[j]);
      EXPECT_EQ(after - before, i == j ? mpq_class(1, 7) : mpq_class(0)) << i << " " << j;
    }
  }
}

TEST(GermCoordinates, LengthIsTheTargetDimension) {
  ExperimentConfig config;
  config.signature = {1, 2, 1, 2, 3};
  const GraphGerm germ = jet_pullback(sample_map(config), sample_model(config));
  EXPECT_EQ(germ_coordinates(germ).size(), dim_target(config.signature));
}

TEST(KeyObservation, SmallSignatureIsStable) {
  ExperimentConfig config;
  config.signature = {1, 1, 1, 2, 4};
  config.seed = 3;
  config.trials = 6;
  const StabilityReport report = key_observation_check(config);
  EXPECT_EQ(report.trials, 6u);
  EXPECT_EQ(report.failures, 0u);
  EXPECT_EQ(report.max_delta, 0);
  EXPECT_GT(report.converse_changes, 0u);
  EXPECT_NO_THROW(require_stable(report, config));
}

TEST(KeyObservation, RequireStableReportsFailures) {
  ExperimentConfig config;
  config.signature = {1, 1, 1, 2, 4};
  StabilityReport report;
  report.trials = 2;
  report.failures = 1;
  report.failed_trials = {1};
  EXPECT_EQ(test::error_code_of([&] { require_stable(report, config); }),
            ErrorCode::stability_violation);
}

TEST(Jacobian, FlatModelColumnIsExact) {
  // rho = 0, g = w + c z^2 with real c: v = -2c xy, so d(germ)/dc has -2 at xy.
  const CrSignature sig{1, 1, 1, 2, 3};
  const auto spaces = CoordinateSpaces::for_signature(sig);
  const MapJet map{sig, ExactSeriesVector({test::S("z1", spaces.source_holo, 3)}),
                   ExactSeriesVector({test::S("w1 + 2*z1^2", spaces.source_holo, 3)})};
  const AlgebraicModel flat{sig, ExactSeriesVector({ExactSeries::zero(spaces.target_full, 3)})};
  ExperimentConfig config;
  config.signature = sig;
  const auto columns = pullback_jacobian(config, map, flat);
  const auto coordinates = source_coordinates(sig);
  const auto rows = enumerate_monomials(3, 2, 3);
  const auto col = std::find_if(coordinates.begin(), coordinates.end(), [](const SourceCoordinate& c) {
    return c.part == SourceCoordinate::Part::g && c.index == (MultiIndex{2, 0}) && !c.imaginary;
  });
  ASSERT_NE(col, coordinates.end());
  const auto& column = columns[static_cast<std::size_t>(col - coordinates.begin())];
  for (std::size_t r = 0; r < rows.size(); ++r) {
    EXPECT_EQ(column[r], (rows[r] == MultiIndex{1, 1, 0}) ? -2.0 : 0.0) << r;
  }
}

TEST(Jacobian, RankIsBoundedAndDeterministic) {
  ExperimentConfig config;
  config.signature = {1, 1, 1, 2, 4};
  config.seed = 21;
  config.trials = 2;
  config.threads = 1;
  const auto serial = rank_trials(config);
  config.threads = 3;
  const auto parallel = rank_trials(config);
  ASSERT_EQ(serial.size(), 2u);
  for (std::size_t t = 0; t < serial.size(); ++t) {
    EXPECT_EQ(serial[t].jacobian_rows, dim_target(config.signature));
    EXPECT_EQ(serial[t].jacobian_cols, source_coordinates(config.signature).size());
    EXPECT_LE(serial[t].numerical_rank, std::min(serial[t].jacobian_rows, serial[t].jacobian_cols));
    EXPECT_GT(serial[t].numerical_rank, 0u);
    EXPECT_EQ(serial[t].singular_values, parallel[t].singular_values);
  }
}

TEST(ExperimentConfig, Validation) {
  ExperimentConfig config;
  config.trials = 0;
  EXPECT_THROW(config.validate(), Error);
  config = {};
  config.fd_step = 0;
  EXPECT_THROW(config.validate(), Error);
  config = {};
  config.sv_rel_tol = 1;
  EXPECT_THROW(config.validate(), Error);
}

}  // namespace
}  // namespace crjet
