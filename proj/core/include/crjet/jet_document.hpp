#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "crjet/cr_jets.hpp"

namespace crjet {

inline constexpr const char* kSchemaVersion = "1";

/// File form of a map jet, its model and optionally a germ.
///
/// Components are JSON arrays of terms
///   {"exponents": [..], "coeff": {"num_re", "den_re", "num_im", "den_im"}}
/// with integers written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise. On input a component may also be a polynomial
/// expression string. Map components live in (z, w) at order k, model
/// components in (z, ~z, w, ~w) at order max(nu, k), germ components in
/// (x, y, u) at order k.
struct JetDocument {
  MapJet map;
  AlgebraicModel model;
  std::optional<GraphGerm> germ;

  const CrSignature& signature() const { return map.signature; }
};

/// Throws Error(syntax_error) for malformed JSON and Error(schema_error) for
/// documents that do not fit the layout above.
JetDocument parse_jet_document(std::string_view json);

/// Canonical form: sorted keys, two-space indent, terms in graded-lex order,
/// trailing newline.
std::string serialize(const JetDocument& document);

/// Throws Error(io_error) when the file cannot be read or written.
JetDocument read_jet_document(const std::filesystem::path& path);
void write_jet_document(const std::filesystem::path& path, const JetDocument& document);

/// Order used for model components of a document with this signature.
unsigned model_order(const CrSignature& signature);

}  // namespace crjet
