#pragma once

#include <optional>
#include <vector>

#include "crjet/scalar.hpp"

namespace crjet::detail {

using RationalMatrix = std::vector<std::vector<mpq_class>>;
using GaussianMatrix = std::vector<std::vector<GaussianRational>>;

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<RationalMatrix> inverse(RationalMatrix a);

std::size_t rank(GaussianMatrix a);

bool is_identity(const RationalMatrix& a);

}  // namespace crjet::detail
