#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "crjet/experiments.hpp"

namespace crjet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kValidationError = 2,
  kComputationError = 3,
  kIoError = 4,
};

/// Runs one command line (without the program name). Results go to `out`;
/// failures are reported as a JSON object on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads an experiment configuration:
///   {"signature": {"m", "d", "mprime", "nu", "k"}, "seed", "trials",
///    "coefficient_bound", "perturbation_bound", "density", "fd_step",
///    "sv_rel_tol", "threads"}
/// Only "signature" is required.
ExperimentConfig parse_config(std::string_view json);

}  // namespace crjet::cli
