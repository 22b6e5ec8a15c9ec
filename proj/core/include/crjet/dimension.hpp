#pragma once

#include <cstdint>
#include <optional>

#include "crjet/signature.hpp"

namespace crjet {

/// Exact jet-space dimensions at one signature, with the asymptotic
/// estimates they are compared against.
struct DimensionReport {
  CrSignature signature;
  std::uint64_t dim_target = 0;         ///< dim R_k
  std::uint64_t dim_source_maps = 0;    ///< dim H_k
  std::uint64_t dim_source_models = 0;  ///< dim A
  std::uint64_t source_total = 0;       ///< dim H_k + dim A
  double estimate_maps = 0;             ///< 2n'(k+1)^n
  double estimate_models = 0;           ///< d(nu+1)^n'
  double estimate_models_real = 0;      ///< d(nu+1)^(2n'), counting ~z', ~w' separately
  /// c in dim R_k >= c k^(2m+d); we use c = d / (2m+d)!, valid for k >= 2.
  double growth_constant = 0;
  std::uint64_t target_growth_bound = 0;  ///< floor(c k^(2m+d))
  /// source_total / (estimate_maps + estimate_models).
  double implied_source_constant = 0;
  bool crossover = false;  ///< dim_target > source_total
};

/// Checked binomial coefficient; throws Error(overflow) past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// d * #{monomials of degree 2..k in 2m+d real variables}.
std::uint64_t dim_target(const CrSignature& s);
/// 2 * [m' (C(n+k,k) - 1) + d (C(n+k,k) - 1 - n)]: complex coefficients of f
/// without constant term and of g~ = O(2).
std::uint64_t dim_source_maps(const CrSignature& s);
/// d * #{real monomials of degree 2..nu in 2n' real variables}.
std::uint64_t dim_source_models(const CrSignature& s);

DimensionReport dimension_report(const CrSignature& s);

/// Smallest k in [2, k_max] with dim_target > dim_source_maps + dim_source_models
/// (the k field of `s` is ignored). Throws Error(precondition) when m = 0.
std::optional<DimensionReport> crossover_order(const CrSignature& s, unsigned k_max);

}  // namespace crjet
