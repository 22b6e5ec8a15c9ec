#include "crjet/jet_document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "crjet/error.hpp"
#include "crjet/expression.hpp"

namespace crjet {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::schema_error, where + ": " + what);
}

const json& field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) schema(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

void only_fields(const json& object, std::initializer_list<const char*> allowed,
                 const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      schema(where, "unexpected field '" + key + "'");
    }
  }
}

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

mpz_class integer_from_json(const json& value, const std::string& where) {
  if (value.is_number_unsigned()) return mpz_class(std::to_string(value.get<std::uint64_t>()));
  if (value.is_number_integer()) return mpz_class(std::to_string(value.get<std::int64_t>()));
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    const std::size_t digits = !text.empty() && text[0] == '-' ? 1 : 0;
    if (text.size() == digits ||
        !std::all_of(text.begin() + static_cast<long>(digits), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      schema(where, "integer string '" + text + "' is not a decimal integer");
    }
    return mpz_class(text, 10);
  }
  schema(where, "expected an integer");
}

mpq_class rational_from_json(const json& num, const json& den, const std::string& where) {
  const mpz_class n = integer_from_json(num, where);
  const mpz_class d = integer_from_json(den, where);
  if (sgn(d) <= 0) schema(where, "denominator must be positive");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

json coeff_to_json(const GaussianRational& c) {
  return json{{"num_re", integer_to_json(c.real().get_num())},
              {"den_re", integer_to_json(c.real().get_den())},
              {"num_im", integer_to_json(c.imag().get_num())},
              {"den_im", integer_to_json(c.imag().get_den())}};
}

json series_to_json(const ExactSeries& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) {
    json exponents = json::array();
    for (std::size_t i = 0; i < t.index.size(); ++i) exponents.push_back(t.index[i]);
    terms.push_back(json{{"exponents", std::move(exponents)}, {"coeff", coeff_to_json(t.coeff)}});
  }
  return terms;
}

ExactSeries series_from_json(const json& value, const SpacePtr& space, unsigned order,
                             const std::string& where) {
  if (value.is_string()) {
    const ExactSeries s = parse_series(value.get<std::string>(), space, order + 1);
    if (s.degree() > static_cast<int>(order)) {
      schema(where, "expression has terms above order " + std::to_string(order));
    }
    return s.truncated(order);
  }
  if (!value.is_array()) schema(where, "expected a term list or an expression string");
  std::vector<ExactSeries::Term> terms;
  std::set<MultiIndex, GradedLexLess> seen;
  for (std::size_t t = 0; t < value.size(); ++t) {
    const std::string at = where + "[" + std::to_string(t) + "]";
    const json& term = value[t];
    if (!term.is_object()) schema(at, "expected an object");
    only_fields(term, {"exponents", "coeff"}, at);
    const json& exponents = field(term, "exponents", at);
    if (!exponents.is_array() || exponents.size() != space->size()) {
      schema(at, "exponents must list " + std::to_string(space->size()) + " integers");
    }
    MultiIndex index(space->size());
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (!exponents[i].is_number_unsigned() || exponents[i].get<std::uint64_t>() > 0xffff) {
        schema(at, "exponents must be non-negative integers");
      }
      index.set(i, static_cast<unsigned>(exponents[i].get<std::uint64_t>()));
    }
    if (index.total_degree() > order) {
      schema(at, "term degree exceeds order " + std::to_string(order));
    }
    if (!seen.insert(index).second) schema(at, "repeated exponents");
    const json& coeff = field(term, "coeff", at);
    only_fields(coeff, {"num_re", "den_re", "num_im", "den_im"}, at + ".coeff");
    GaussianRational c(
        rational_from_json(field(coeff, "num_re", at), field(coeff, "den_re", at), at),
        rational_from_json(field(coeff, "num_im", at), field(coeff, "den_im", at), at));
    terms.push_back({std::move(index), std::move(c)});
  }
  return ExactSeries::from_terms(space, order, std::move(terms));
}

ExactSeriesVector vector_from_json(const json& value, std::size_t count, const SpacePtr& space,
                                   unsigned order, const std::string& where) {
  if (!value.is_array() || value.size() != count) {
    schema(where, "expected " + std::to_string(count) + " components");
  }
  std::vector<ExactSeries> components;
  for (std::size_t j = 0; j < count; ++j) {
    components.push_back(
        series_from_json(value[j], space, order, where + "[" + std::to_string(j) + "]"));
  }
  return ExactSeriesVector(std::move(components));
}

json vector_to_json(const ExactSeriesVector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(series_to_json(c));
  return out;
}

void expect_space(const json& section, const char* expected, const std::string& where) {
  const json& space = field(section, "space", where);
  if (!space.is_string() || space.get<std::string>() != expected) {
    schema(where, std::string("space must be \"") + expected + "\"");
  }
}

unsigned unsigned_field(const json& object, const char* key, const std::string& where) {
  const json& value = field(object, key, where);
  if (!value.is_number_unsigned() || value.get<std::uint64_t>() > 0xffff) {
    schema(where, std::string("'") + key + "' must be a small non-negative integer");
  }
  return static_cast<unsigned>(value.get<std::uint64_t>());
}

}  // namespace

unsigned model_order(const CrSignature& signature) { return std::max(signature.nu, signature.k); }

JetDocument parse_jet_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::syntax_error, std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) schema("document", "expected an object");
  only_fields(root, {"schema_version", "signature", "map", "model", "germ"}, "document");
  const json& version = field(root, "schema_version", "document");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    schema("schema_version", std::string("expected \"") + kSchemaVersion + "\"");
  }

  const json& sig_json = field(root, "signature", "document");
  only_fields(sig_json, {"m", "d", "mprime", "nu", "k"}, "signature");
  CrSignature sig;
  sig.m = unsigned_field(sig_json, "m", "signature");
  sig.d = unsigned_field(sig_json, "d", "signature");
  sig.m_prime = unsigned_field(sig_json, "mprime", "signature");
  sig.nu = unsigned_field(sig_json, "nu", "signature");
  sig.k = unsigned_field(sig_json, "k", "signature");
  sig.validate();
  const auto spaces = CoordinateSpaces::for_signature(sig);

  JetDocument doc;
  const json& map = field(root, "map", "document");
  only_fields(map, {"space", "f", "g"}, "map");
  expect_space(map, "source", "map");
  doc.map = MapJet{sig, vector_from_json(field(map, "f", "map"), sig.m_prime, spaces.source_holo, sig.k, "map.f"),
                   vector_from_json(field(map, "g", "map"), sig.d, spaces.source_holo, sig.k, "map.g")};

  const json& model = field(root, "model", "document");
  only_fields(model, {"space", "rho_tilde"}, "model");
  expect_space(model, "target", "model");
  doc.model = AlgebraicModel{sig, vector_from_json(field(model, "rho_tilde", "model"), sig.d,
                                                   spaces.target_full, model_order(sig),
                                                   "model.rho_tilde")};

  if (auto it = root.find("germ"); it != root.end()) {
    only_fields(*it, {"space", "r"}, "germ");
    expect_space(*it, "graph", "germ");
    doc.germ = GraphGerm{sig, vector_from_json(field(*it, "r", "germ"), sig.d, spaces.graph,
                                               sig.k, "germ.r")};
  }
  return doc;
}

std::string serialize(const JetDocument& doc) {
  const CrSignature& sig = doc.signature();
  json root;
  root["schema_version"] = kSchemaVersion;
  root["signature"] = json{{"m", sig.m}, {"d", sig.d}, {"mprime", sig.m_prime},
                           {"nu", sig.nu}, {"k", sig.k}};
  root["map"] = json{{"space", "source"}, {"f", vector_to_json(doc.map.f)},
                     {"g", vector_to_json(doc.map.g)}};
  root["model"] = json{{"space", "target"}, {"rho_tilde", vector_to_json(doc.model.rho_tilde)}};
  if (doc.germ) root["germ"] = json{{"space", "graph"}, {"r", vector_to_json(doc.germ->r)}};
  return root.dump(2) + "\n";
}

JetDocument read_jet_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::io_error, "cannot read '" + path.string() + "'");
  return parse_jet_document(buffer.str());
}

void write_jet_document(const std::filesystem::path& path, const JetDocument& document) {
  const std::string text = serialize(document);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path.string() + "'");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path.string() + "'");
}

}  // namespace crjet
