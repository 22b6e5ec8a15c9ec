#include <algorithm>

#include "crjet/cr_jets.hpp"
#include "crjet/error.hpp"
#include "exact_matrix.hpp"

namespace crjet {

namespace detail {

std::optional<RationalMatrix> inverse(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const mpq_class scale = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      const mpq_class factor = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= factor * a[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

std::size_t rank(GaussianMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t row = r + 1; row < rows; ++row) {
      if (a[row][col].is_zero()) continue;
      const GaussianRational factor = a[row][col] / a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[row][j] -= factor * a[r][j];
    }
    ++r;
  }
  return r;
}

bool is_identity(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace detail

namespace {

MultiIndex unit_index(std::size_t size, std::size_t i) {
  MultiIndex e(size);
  e.set(i, 1);
  return e;
}

}  // namespace

bool MapJet::is_normalized() const {
  const unsigned m = signature.m;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& gi = g[i];
    const std::size_t vars = gi.space().size();
    for (std::size_t v = 0; v < vars; ++v) {
      const GaussianRational expected = (v == m + i) ? GaussianRational(1) : GaussianRational(0);
      if (!(gi.coefficient(unit_index(vars, v)) == expected)) return false;
    }
  }
  return true;
}

MapJet validate_map(const MapJet& map) {
  const CrSignature& sig = map.signature;
  sig.validate();
  const auto spaces = CoordinateSpaces::for_signature(sig);
  if (map.f.size() != sig.m_prime || map.g.size() != sig.d) {
    throw Error(ErrorCode::invalid_argument, "map needs m' f-components and d g-components");
  }
  auto check = [&](const ExactSeries& s) {
    if (!same_space(s.space_ptr(), spaces.source_holo)) {
      throw Error(ErrorCode::space_mismatch, "map components must be holomorphic series in (z, w)");
    }
    if (s.order() != sig.k) {
      throw Error(ErrorCode::order_mismatch, "map components must be truncated at order k");
    }
    if (!s.constant_term().is_zero()) {
      throw Error(ErrorCode::has_low_order_terms, "map must send 0 to 0");
    }
  };
  for (const auto& s : map.f) check(s);
  for (const auto& s : map.g) check(s);
  return map;
}

GraphGerm validate_germ(const GraphGerm& germ) {
  const CrSignature& sig = germ.signature;
  sig.validate();
  const auto spaces = CoordinateSpaces::for_signature(sig);
  if (germ.r.size() != sig.d) throw Error(ErrorCode::invalid_argument, "germ needs d components");
  for (const auto& r : germ.r) {
    if (!same_space(r.space_ptr(), spaces.graph)) {
      throw Error(ErrorCode::space_mismatch, "germ components must live in (x, y, u)");
    }
    if (r.order() != sig.k) throw Error(ErrorCode::order_mismatch, "germ must be truncated at k");
    if (!r.is_real()) throw Error(ErrorCode::non_real_coefficient, "germ must be real");
    if (!r.is_zero() && r.min_degree() < 2) {
      throw Error(ErrorCode::has_low_order_terms, "germ must have no constant or linear terms");
    }
  }
  return germ;
}

bool has_full_rank_differential(const MapJet& map) {
  const std::size_t n = map.signature.n();
  detail::GaussianMatrix jacobian;
  auto add_rows = [&](const ExactSeriesVector& components) {
    for (const auto& s : components) {
      std::vector<GaussianRational> row;
      for (std::size_t v = 0; v < n; ++v) row.push_back(s.coefficient(unit_index(n, v)));
      jacobian.push_back(std::move(row));
    }
  };
  add_rows(map.f);
  add_rows(map.g);
  return detail::rank(std::move(jacobian)) == n;
}

}  // namespace crjet
