#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vsp/graph_io.hpp"
#include "vsp/multilevel.hpp"

namespace vsp::tools {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInputError = 2,
  kInfeasible = 3,
  kValidationFailure = 4,
  kTooLarge = 5,
};

enum class OutputFormat { kPlain, kJson };

struct GraphInput {
  std::filesystem::path path;
  std::optional<GraphFormat> format;  // inferred from the extension when empty
};

struct SolveCommand {
  GraphInput input;
  SolveParams params;
  OutputFormat output = OutputFormat::kPlain;
};

struct OracleCommand {
  GraphInput input;
  SolveParams params;  // only ub_fraction and lower_bound are used
  OutputFormat output = OutputFormat::kPlain;
};

struct BenchCommand {
  std::filesystem::path manifest;
  // Base directory for relative graph paths; defaults to the manifest's directory.
  std::optional<std::filesystem::path> data_dir;
  SolveParams params;
};

int run_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err);
int run_oracle(const OracleCommand& cmd, std::ostream& out, std::ostream& err);
int run_bench(const BenchCommand& cmd, std::ostream& out, std::ostream& err);

struct ManifestRow {
  std::string name;
  std::filesystem::path path;
  Vertex expected_n = 0;
  Weight reference_separator = 0;
  double ratio_threshold = 0.0;
};

/// One row per non-blank, non-'#' line: `name path expected_n reference_sep ratio`.
/// Throws ParseError.
std::vector<ManifestRow> read_manifest(const std::filesystem::path& path);

/// 2m / (n (n - 1)), the off-diagonal pattern density.
double pattern_density(const Graph& g);

/// Full command-line entry point: `vsp <solve|oracle|bench> ...`.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace vsp::tools
