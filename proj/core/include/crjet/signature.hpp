#pragma once

#include <string>

#include "crjet/variable_space.hpp"

namespace crjet {

/// Dimensions of a source germ (CR dimension m, codimension d) and of a
/// target model (CR dimension m', same codimension), the model degree nu, and
/// the truncation order k.
struct CrSignature {
  unsigned m = 1;
  unsigned d = 1;
  unsigned m_prime = 1;
  unsigned nu = 2;
  unsigned k = 2;

  unsigned n() const noexcept { return m + d; }
  unsigned n_prime() const noexcept { return m_prime + d; }

  /// Requires m >= 1, d >= 1, m' >= m, nu >= 2, k >= 2.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const CrSignature&, const CrSignature&) = default;
};

/// The variable spaces every jet of a given signature lives in.
struct CoordinateSpaces {
  SpacePtr source_holo;  ///< (z1..zm, w1..wd)
  SpacePtr source_full;  ///< (z, ~z, w, ~w)
  SpacePtr source_real;  ///< (x, y, u, v)
  SpacePtr graph;        ///< (x, y, u)
  SpacePtr target_full;  ///< (z', ~z', w', ~w'), names without primes

  static CoordinateSpaces for_signature(const CrSignature& signature);
};

inline constexpr const char* kSourceFamily = "source";
inline constexpr const char* kTargetFamily = "target";

}  // namespace crjet
