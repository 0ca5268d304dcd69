#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "conehankel/types.hpp"

namespace conehankel::cli {

/// Exit codes: 0 success, 1 validation failure, 2 numerical non-convergence,
/// 3 internal invariant violation.
enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kNonConvergence = 2,
  kInternalError = 3,
};

enum class Command {
  OrderCheck,
  OpBuild,
  OpNorms,
  StudyCompactness,
  StudyFredholm,
  NehariGap,
  VerifyIdentities,
};

struct RunConfig {
  Command command;
  std::filesystem::path order_path;
  std::filesystem::path symbol_path;
  std::filesystem::path out_dir = ".";
  std::vector<std::string> formats = {"json", "csv"};  // and optionally "gnuplot"

  int radius = 8;              // order check / op build
  std::vector<int> radii;      // studies
  std::string kind = "hphi";   // op build / op norms
  int k = 5;                   // singular values per radius
  int free_degree = 12;        // nehari D
  int budget = 400;            // nehari sweep budget
  int margin = 2;              // commutation margin in verify
  std::uint64_t seed = 42;
  double sigma_min_threshold = 0.1;
  double tolerance = 1e-10;

  /// Canonical form used for the embedded config hash.
  std::string canonical() const;
};

/// Thrown by parsing/validation with a `field: message` diagnostic.
struct CliError {
  std::string diagnostic;
  int exit_code = kValidationError;
};

/// Parses argv into a validated config. Throws CliError on any invalid
/// input; the caller prints the diagnostic to stderr and exits 1. Paths are
/// checked for existence here, at parse time.
RunConfig parse_inputs(int argc, const char* const* argv);

/// Runs the configured command, writing artifacts under out_dir, printing a
/// one-line summary to stdout. Returns the exit code.
int execute(const RunConfig& config);

/// Entry point used by the binary: parse, execute, map exceptions to codes.
int run_main(int argc, const char* const* argv);

}  // namespace conehankel::cli
