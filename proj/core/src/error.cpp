#include "crjet/error.hpp"

namespace crjet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::space_mismatch: return "SpaceMismatch";
    case ErrorCode::order_mismatch: return "OrderMismatch";
    case ErrorCode::index_length_mismatch: return "IndexLengthMismatch";
    case ErrorCode::nonzero_constant_binding: return "NonzeroConstantBinding";
    case ErrorCode::unknown_variable: return "UnknownVariable";
    case ErrorCode::unpaired_variable: return "UnpairedVariable";
    case ErrorCode::non_real_coefficient: return "NonRealCoefficient";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::invalid_signature: return "InvalidSignature";
    case ErrorCode::non_real_model: return "NonRealModel";
    case ErrorCode::has_low_order_terms: return "HasLowOrderTerms";
    case ErrorCode::degree_exceeded: return "DegreeExceeded";
    case ErrorCode::singular_linear_part: return "SingularLinearPart";
    case ErrorCode::complex_linear_part: return "ComplexLinearPart";
    case ErrorCode::nonzero_z_linear_part: return "NonzeroZLinearPart";
    case ErrorCode::not_normalized: return "NotNormalized";
    case ErrorCode::signature_mismatch: return "SignatureMismatch";
    case ErrorCode::not_in_graph_shape: return "NotInGraphShape";
    case ErrorCode::no_stabilization: return "NoStabilization";
    case ErrorCode::internal_reality_failure: return "InternalRealityFailure";
    case ErrorCode::precondition: return "Precondition";
    case ErrorCode::overflow: return "Overflow";
    case ErrorCode::stability_violation: return "StabilityViolation";
    case ErrorCode::degenerate_evaluation: return "DegenerateEvaluation";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::schema_error: return "SchemaError";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::no_stabilization:
    case ErrorCode::internal_reality_failure:
    case ErrorCode::overflow:
    case ErrorCode::stability_violation:
    case ErrorCode::degenerate_evaluation:
      return ErrorCategory::computation;
    case ErrorCode::io_error:
      return ErrorCategory::io;
    default:
      return ErrorCategory::validation;
  }
}

}  // namespace crjet
