#include "crjet/cr_jets.hpp"
#include "crjet/error.hpp"

namespace crjet {

AlgebraicModel validate_model(const AlgebraicModel& model) {
  const CrSignature& sig = model.signature;
  sig.validate();
  const auto spaces = CoordinateSpaces::for_signature(sig);
  if (model.rho_tilde.size() != sig.d) {
    throw Error(ErrorCode::invalid_argument, "model needs exactly d components");
  }
  for (const auto& rho : model.rho_tilde) {
    if (!same_space(rho.space_ptr(), spaces.target_full)) {
      throw Error(ErrorCode::space_mismatch, "model components must live in (z', ~z', w', ~w')");
    }
    if (rho.order() < sig.nu) {
      throw Error(ErrorCode::order_mismatch, "model truncation order must be at least nu");
    }
    if (!rho.is_zero() && rho.min_degree() < 2) {
      throw Error(ErrorCode::has_low_order_terms, "rho_tilde must be O(2)");
    }
    if (rho.degree() > static_cast<int>(sig.nu)) {
      throw Error(ErrorCode::degree_exceeded,
                  "rho_tilde has degree " + std::to_string(rho.degree()) + " > nu");
    }
    const VariableSpace& space = rho.space();
    for (const auto& t : rho.terms()) {
      MultiIndex swapped(t.index.size());
      for (std::size_t i = 0; i < t.index.size(); ++i) swapped.set(space.conjugate_of(i), t.index[i]);
      if (!(rho.coefficient(swapped) == t.coeff.conj())) {
        throw Error(ErrorCode::non_real_model, "rho_tilde is not fixed by conjugation");
      }
    }
  }
  return model;
}

}  // namespace crjet
