#include <gtest/gtest.h>

#include <functional>
#include <sstream>

#include "crjet/dimension.hpp"
#include "crjet/error.hpp"
#include "test_support.hpp"

namespace crjet {
namespace {

// Counts exponent vectors over `vars` variables with degree in [lo, hi] by
// walking every vector with entries <= hi.
std::uint64_t brute_count(unsigned vars, unsigned lo, unsigned hi) {
  std::uint64_t count = 0;
  std::vector<unsigned> e(vars, 0);
  std::function<void(unsigned, unsigned)> walk = [&](unsigned pos, unsigned degree) {
    if (pos == vars) {
      if (degree >= lo && degree <= hi) ++count;
      return;
    }
    for (unsigned x = 0; degree + x <= hi; ++x) walk(pos + 1, degree + x);
  };
  walk(0, 0);
  return count;
}

TEST(Dimension, PlaneFormula) {
  for (unsigned k = 2; k <= 30; ++k) {
    const CrSignature s{1, 1, 1, 2, k};
    EXPECT_EQ(dim_target(s), binomial(k + 3, 3) - 4) << k;
  }
}

TEST(Dimension, CrossoverReferenceValues) {
  const CrSignature s{1, 1, 1, 2, 10};
  EXPECT_EQ(dim_target(s), 282u);
  EXPECT_EQ(dim_source_maps(s), 256u);
  EXPECT_EQ(dim_source_models(s), 10u);
  const auto found = crossover_order(s, 40);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->signature.k, 10u);
  EXPECT_EQ(found->source_total, 266u);
  const CrSignature before{1, 1, 1, 2, 9};
  EXPECT_LE(dim_target(before), dim_source_maps(before) + dim_source_models(before));
}

TEST(Dimension, MatchesBruteForceEnumeration) {
  for (unsigned m = 1; m <= 2; ++m) {
    for (unsigned d = 1; d <= 2; ++d) {
      for (unsigned mp = m; mp <= m + 1; ++mp) {
        for (unsigned nu = 2; nu <= 3; ++nu) {
          for (unsigned k = 2; k <= 6; ++k) {
            const CrSignature s{m, d, mp, nu, k};
            const unsigned n = m + d;
            const unsigned np = mp + d;
            EXPECT_EQ(dim_target(s), d * brute_count(2 * m + d, 2, k));
            EXPECT_EQ(dim_source_maps(s), 2 * (mp * brute_count(n, 1, k) + d * brute_count(n, 2, k)));
            EXPECT_EQ(dim_source_models(s), d * brute_count(2 * np, 2, nu));
          }
        }
      }
    }
  }
}

TEST(Dimension, MatchesOracleScript) {
  std::istringstream lines(test::read_text(test::oracle_dir() / "dimension_counts_k6.txt"));
  unsigned m, d, mp, nu, k;
  std::uint64_t target, maps, models;
  int rows = 0;
  while (lines >> m >> d >> mp >> nu >> k >> target >> maps >> models) {
    const CrSignature s{m, d, mp, nu, k};
    EXPECT_EQ(dim_target(s), target);
    EXPECT_EQ(dim_source_maps(s), maps);
    EXPECT_EQ(dim_source_models(s), models);
    ++rows;
  }
  EXPECT_EQ(rows, 20);
}

TEST(Dimension, GrowthBoundHoldsForSmallSignatures) {
  for (unsigned m = 1; m <= 3; ++m) {
    for (unsigned d = 1; d <= 3; ++d) {
      for (unsigned k = 2; k <= 40; ++k) {
        const auto r = dimension_report({m, d, m, 2, k});
        EXPECT_LE(r.target_growth_bound, r.dim_target) << m << " " << d << " " << k;
      }
    }
  }
}

TEST(Dimension, ReportFields) {
  const auto r = dimension_report({1, 1, 1, 2, 10});
  EXPECT_DOUBLE_EQ(r.estimate_maps, 2.0 * 2 * 121);
  EXPECT_DOUBLE_EQ(r.estimate_models, 9.0);
  EXPECT_DOUBLE_EQ(r.estimate_models_real, 81.0);
  EXPECT_DOUBLE_EQ(r.growth_constant, 1.0 / 6.0);
  EXPECT_EQ(r.target_growth_bound, 166u);
  EXPECT_TRUE(r.crossover);
}

TEST(Dimension, TargetStaysAheadAfterCrossover) {
  for (unsigned k = 10; k <= 20; ++k) {
    const auto r = dimension_report({1, 1, 1, 2, k});
    EXPECT_GT(r.dim_target, r.source_total) << k;
  }
}

TEST(Dimension, Errors) {
  EXPECT_EQ(test::error_code_of([] { crossover_order({0, 1, 1, 2, 2}, 10); }), ErrorCode::precondition);
  EXPECT_EQ(test::error_code_of([] { dim_target({40, 40, 40, 2, 60000}); }), ErrorCode::overflow);
  EXPECT_EQ(test::error_code_of([] { binomial(200, 100); }), ErrorCode::overflow);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_FALSE(crossover_order({1, 1, 1, 2, 2}, 9).has_value());
}

}  // namespace
}  // namespace crjet
