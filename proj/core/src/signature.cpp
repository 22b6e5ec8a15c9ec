#include "crjet/signature.hpp"

#include "crjet/error.hpp"

namespace crjet {

void CrSignature::validate() const {
  if (m < 1) throw Error(ErrorCode::invalid_signature, "CR dimension m must be >= 1");
  if (d < 1) throw Error(ErrorCode::invalid_signature, "codimension d must be >= 1");
  if (m_prime < m) throw Error(ErrorCode::invalid_signature, "target CR dimension m' must be >= m");
  if (nu < 2) throw Error(ErrorCode::invalid_signature, "model degree nu must be >= 2");
  if (k < 2) throw Error(ErrorCode::invalid_signature, "truncation order k must be >= 2");
}

std::string CrSignature::to_string() const {
  return "m=" + std::to_string(m) + " d=" + std::to_string(d) + " m'=" + std::to_string(m_prime) +
         " nu=" + std::to_string(nu) + " k=" + std::to_string(k);
}

CoordinateSpaces CoordinateSpaces::for_signature(const CrSignature& s) {
  return {VariableSpace::holomorphic(kSourceFamily, s.m, s.d),
          VariableSpace::full(kSourceFamily, s.m, s.d),
          VariableSpace::real_coordinates(kSourceFamily, s.m, s.d),
          VariableSpace::graph(kSourceFamily, s.m, s.d),
          VariableSpace::full(kTargetFamily, s.m_prime, s.d)};
}

}  // namespace crjet
