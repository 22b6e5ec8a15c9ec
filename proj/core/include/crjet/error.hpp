#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crjet {

// Validation errors reject malformed input; computation errors signal that a
// well-formed input could not be processed (or an internal invariant broke).
enum class ErrorCategory { validation, computation, io };

enum class ErrorCode {
  // series_core
  space_mismatch,
  order_mismatch,
  index_length_mismatch,
  nonzero_constant_binding,
  unknown_variable,
  unpaired_variable,
  non_real_coefficient,
  invalid_argument,
  // cr_jets
  invalid_signature,
  non_real_model,
  has_low_order_terms,
  degree_exceeded,
  singular_linear_part,
  complex_linear_part,
  nonzero_z_linear_part,
  not_normalized,
  signature_mismatch,
  not_in_graph_shape,
  no_stabilization,
  internal_reality_failure,
  // jet_dimension
  precondition,
  overflow,
  // experiments
  stability_violation,
  degenerate_evaluation,
  // cli / io
  syntax_error,
  schema_error,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;
ErrorCategory category_of(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace crjet
