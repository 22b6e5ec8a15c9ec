#include "crjet_cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "crjet/dimension.hpp"
#include "crjet/error.hpp"
#include "crjet/expression.hpp"
#include "crjet/jet_document.hpp"
#include "crjet/series_ops.hpp"

namespace crjet::cli {

namespace {

using nlohmann::json;

std::string format_double(double x) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

std::string_view category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::validation:
      return "validation";
    case ErrorCategory::computation:
      return "computation";
    case ErrorCategory::io:
      return "io";
  }
  return "unknown";
}

int exit_code_for(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::validation:
      return kValidationError;
    case ErrorCategory::computation:
      return kComputationError;
    case ErrorCategory::io:
      return kIoError;
  }
  return kComputationError;
}

int report_error(std::ostream& err, std::string_view code, std::string_view category,
                 const std::string& message, int status) {
  err << json{{"error", {{"code", code}, {"category", category}, {"message", message}}}}.dump()
      << "\n";
  return status;
}

void print_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << key << "  " << value << "\n";
  }
}

json signature_json(const CrSignature& s) {
  return json{{"m", s.m}, {"d", s.d}, {"mprime", s.m_prime}, {"nu", s.nu}, {"k", s.k}};
}

json dimension_json(const DimensionReport& r) {
  return json{{"signature", signature_json(r.signature)},
              {"dim_target", r.dim_target},
              {"dim_source_maps", r.dim_source_maps},
              {"dim_source_models", r.dim_source_models},
              {"source_total", r.source_total},
              {"estimate_maps", r.estimate_maps},
              {"estimate_models", r.estimate_models},
              {"estimate_models_real", r.estimate_models_real},
              {"growth_constant", r.growth_constant},
              {"target_growth_bound", r.target_growth_bound},
              {"implied_source_constant", r.implied_source_constant},
              {"crossover", r.crossover}};
}

void print_dimensions(std::ostream& out, const DimensionReport& r) {
  print_table(out, {{"signature", r.signature.to_string()},
                    {"dim_target", std::to_string(r.dim_target)},
                    {"dim_source_maps", std::to_string(r.dim_source_maps)},
                    {"dim_source_models", std::to_string(r.dim_source_models)},
                    {"source_total", std::to_string(r.source_total)},
                    {"estimate_maps", format_double(r.estimate_maps)},
                    {"estimate_models", format_double(r.estimate_models)},
                    {"estimate_models_real", format_double(r.estimate_models_real)},
                    {"growth_constant", format_double(r.growth_constant)},
                    {"target_growth_bound", std::to_string(r.target_growth_bound)},
                    {"implied_source_constant", format_double(r.implied_source_constant)},
                    {"crossover", r.crossover ? "yes" : "no"}});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct SignatureFlags {
  unsigned m = 1;
  unsigned d = 1;
  unsigned m_prime = 1;
  unsigned nu = 2;
  unsigned k = 2;

  void add_to(CLI::App* cmd, bool with_k) {
    cmd->add_option("--m", m, "number of z variables")->required();
    cmd->add_option("--d", d, "codimension")->required();
    cmd->add_option("--mprime", m_prime, "number of target z variables")->required();
    cmd->add_option("--nu", nu, "model degree")->required();
    if (with_k) cmd->add_option("--k", k, "jet order")->required();
  }

  CrSignature signature() const { return {m, d, m_prime, nu, k}; }
};

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::syntax_error, std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw Error(ErrorCode::schema_error, "config must be an object");
  static const std::vector<std::string> known = {
      "signature", "seed",    "trials",     "coefficient_bound", "perturbation_bound",
      "density",   "fd_step", "sv_rel_tol", "threads"};
  for (const auto& [key, value] : root.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw Error(ErrorCode::schema_error, "config: unexpected field '" + key + "'");
    }
  }
  const auto count = [&](const json& v, const std::string& key) -> unsigned {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffULL) {
      throw Error(ErrorCode::schema_error, "config: '" + key + "' must be a non-negative integer");
    }
    return static_cast<unsigned>(v.get<std::uint64_t>());
  };
  const auto real = [&](const json& v, const std::string& key) -> double {
    if (!v.is_number()) throw Error(ErrorCode::schema_error, "config: '" + key + "' must be a number");
    return v.get<double>();
  };

  ExperimentConfig config;
  auto sig = root.find("signature");
  if (sig == root.end() || !sig->is_object()) {
    throw Error(ErrorCode::schema_error, "config: missing 'signature' object");
  }
  for (const char* key : {"m", "d", "mprime", "nu", "k"}) {
    if (!sig->contains(key)) {
      throw Error(ErrorCode::schema_error, std::string("config: signature lacks '") + key + "'");
    }
  }
  config.signature = {count((*sig)["m"], "m"), count((*sig)["d"], "d"),
                      count((*sig)["mprime"], "mprime"), count((*sig)["nu"], "nu"),
                      count((*sig)["k"], "k")};
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned()) {
      throw Error(ErrorCode::schema_error, "config: 'seed' must be a non-negative integer");
    }
    config.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("trials")) config.trials = count(root["trials"], "trials");
  if (root.contains("coefficient_bound")) {
    config.coefficient_bound = count(root["coefficient_bound"], "coefficient_bound");
  }
  if (root.contains("perturbation_bound")) {
    config.perturbation_bound = count(root["perturbation_bound"], "perturbation_bound");
  }
  if (root.contains("density")) config.density = real(root["density"], "density");
  if (root.contains("fd_step")) config.fd_step = real(root["fd_step"], "fd_step");
  if (root.contains("sv_rel_tol")) config.sv_rel_tol = real(root["sv_rel_tol"], "sv_rel_tol");
  if (root.contains("threads")) config.threads = count(root["threads"], "threads");
  config.signature.validate();
  config.validate();
  return config;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact jets of CR submanifolds pulled back from algebraic models", "crjet"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  std::string config_path;
  bool as_json = false;

  auto* pullback = app.add_subcommand("pullback", "compute the preimage germ of a jet document");
  pullback->add_option("--in", in_path, "input jet document")->required();
  pullback->add_option("--out", out_path, "write the document with its germ here");

  auto* check = app.add_subcommand("check", "verify the germ embedded in a jet document");
  check->add_option("--in", in_path, "jet document with a germ")->required();

  SignatureFlags dims_flags;
  auto* dims = app.add_subcommand("dims", "jet space dimensions at one signature");
  dims_flags.add_to(dims, true);
  dims->add_flag("--json", as_json, "print JSON");

  SignatureFlags crossover_flags;
  unsigned k_max = 0;
  auto* crossover = app.add_subcommand("crossover", "first order where the target outgrows the source");
  crossover_flags.add_to(crossover, false);
  crossover->add_option("--kmax", k_max, "largest order to scan")->required();
  crossover->add_flag("--json", as_json, "print JSON");

  auto* keyobs = app.add_subcommand("keyobs", "truncation stability trials");
  keyobs->add_option("--config", config_path, "experiment configuration")->required();
  keyobs->add_flag("--json", as_json, "print JSON");

  auto* rank = app.add_subcommand("rank", "numerical rank of the pullback Jacobian");
  rank->add_option("--config", config_path, "experiment configuration")->required();
  rank->add_flag("--json", as_json, "print JSON");

  std::string t_text;
  auto* norm = app.add_subcommand("norm", "weighted norm of a germ");
  norm->add_option("--in", in_path, "jet document")->required();
  norm->add_option("--t", t_text, "positive rational weight")->required();

  std::string expr_text;
  std::string space_name = "full";
  unsigned expr_m = 1;
  unsigned expr_d = 1;
  unsigned expr_order = 2;
  bool expr_realify = false;
  auto* expr = app.add_subcommand("expr", "evaluate a polynomial expression");
  expr->add_option("text", expr_text, "expression")->required();
  expr->add_option("--space", space_name, "holomorphic, full, real or graph")
      ->check(CLI::IsMember({"holomorphic", "full", "real", "graph"}));
  expr->add_option("--m", expr_m, "number of z variables");
  expr->add_option("--d", expr_d, "number of w variables");
  expr->add_option("--order", expr_order, "truncation order");
  expr->add_flag("--realify", expr_realify, "rewrite in x, y, u, v");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "UsageError", "validation", e.what(), kValidationError);
  }

  try {
    if (pullback->parsed()) {
      JetDocument doc = read_jet_document(in_path);
      doc.germ = jet_pullback(doc.map, doc.model);
      for (const auto& component : doc.germ->r) out << to_text(component) << "\n";
      if (!out_path.empty()) write_jet_document(out_path, doc);
      return kSuccess;
    }
    if (check->parsed()) {
      const JetDocument doc = read_jet_document(in_path);
      if (!doc.germ) throw Error(ErrorCode::schema_error, "document has no germ to check");
      const bool ok = is_jet_preimage(doc.map, doc.model, *doc.germ);
      out << (ok ? "match" : "mismatch") << "\n";
      return ok ? kSuccess : kCheckFailed;
    }
    if (dims->parsed()) {
      const DimensionReport report = dimension_report(dims_flags.signature());
      if (as_json) {
        out << dimension_json(report).dump(2) << "\n";
      } else {
        print_dimensions(out, report);
      }
      return kSuccess;
    }
    if (crossover->parsed()) {
      CrSignature s = crossover_flags.signature();
      s.k = 2;
      s.validate();
      const auto found = crossover_order(s, k_max);
      if (as_json) {
        out << json{{"k_star", found ? json(found->signature.k) : json(nullptr)},
                    {"report", found ? dimension_json(*found) : json(nullptr)}}
                   .dump(2)
            << "\n";
      } else if (found) {
        out << "k* = " << found->signature.k << "\n";
        print_dimensions(out, *found);
      } else {
        out << "no crossover for k <= " << k_max << "\n";
      }
      return kSuccess;
    }
    if (keyobs->parsed()) {
      const ExperimentConfig config = parse_config(read_file(config_path));
      const StabilityReport report = key_observation_check(config);
      if (as_json) {
        out << json{{"signature", signature_json(config.signature)},
                    {"seed", config.seed},
                    {"trials", report.trials},
                    {"failures", report.failures},
                    {"failed_trials", report.failed_trials},
                    {"max_delta", rational_to_string(report.max_delta)},
                    {"converse_changes", report.converse_changes}}
                   .dump(2)
            << "\n";
      } else {
        print_table(out, {{"signature", config.signature.to_string()},
                          {"seed", std::to_string(config.seed)},
                          {"trials", std::to_string(report.trials)},
                          {"failures", std::to_string(report.failures)},
                          {"max_delta", rational_to_string(report.max_delta)},
                          {"converse_changes", std::to_string(report.converse_changes)}});
      }
      return report.failures == 0 ? kSuccess : kCheckFailed;
    }
    if (rank->parsed()) {
      const ExperimentConfig config = parse_config(read_file(config_path));
      const auto reports = rank_trials(config);
      if (as_json) {
        json trials = json::array();
        for (const auto& r : reports) {
          trials.push_back(json{{"trial", r.trial},
                                {"rows", r.jacobian_rows},
                                {"cols", r.jacobian_cols},
                                {"rank", r.numerical_rank},
                                {"sigma_max", r.sigma_max},
                                {"sigma_threshold", r.sigma_threshold},
                                {"singular_values", r.singular_values}});
        }
        out << json{{"signature", signature_json(config.signature)},
                    {"seed", config.seed},
                    {"trials", std::move(trials)}}
                   .dump(2)
            << "\n";
      } else {
        out << "trial  rows  cols  rank  sigma_max  threshold\n";
        for (const auto& r : reports) {
          out << r.trial << "  " << r.jacobian_rows << "  " << r.jacobian_cols << "  "
              << r.numerical_rank << "  " << format_double(r.sigma_max) << "  "
              << format_double(r.sigma_threshold) << "\n";
        }
      }
      return kSuccess;
    }
    if (norm->parsed()) {
      const JetDocument doc = read_jet_document(in_path);
      const GraphGerm germ = doc.germ ? *doc.germ : jet_pullback(doc.map, doc.model);
      const mpq_class value = weighted_norm(germ.r, parse_rational(t_text));
      out << rational_to_string(value) << "\n";
      return kSuccess;
    }
    if (expr->parsed()) {
      SpacePtr space;
      if (space_name == "holomorphic") space = VariableSpace::holomorphic(kSourceFamily, expr_m, expr_d);
      if (space_name == "full") space = VariableSpace::full(kSourceFamily, expr_m, expr_d);
      if (space_name == "real") space = VariableSpace::real_coordinates(kSourceFamily, expr_m, expr_d);
      if (space_name == "graph") space = VariableSpace::graph(kSourceFamily, expr_m, expr_d);
      ExactSeries s = parse_series(expr_text, space, expr_order);
      if (expr_realify) s = realify(s);
      out << to_text(s) << "\n";
      return kSuccess;
    }
  } catch (const Error& e) {
    return report_error(err, to_string(e.code()), category_name(e.category()), e.what(),
                        exit_code_for(e.category()));
  } catch (const std::exception& e) {
    return report_error(err, "InternalError", "computation", e.what(), kComputationError);
  }
  return kValidationError;
}

}  // namespace crjet::cli
