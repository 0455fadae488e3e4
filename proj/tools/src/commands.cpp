#include "vsp/tools/commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vsp/errors.hpp"
#include "vsp/oracle.hpp"
#include "vsp/tools/report.hpp"

namespace vsp::tools {
namespace {

Graph load(const GraphInput& input) {
  const GraphFormat format = input.format ? *input.format : format_from_extension(input.path);
  return load_graph(input.path, format);
}

std::string join_one_based(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i] + 1;
  return out.str();
}

std::vector<Vertex> one_based(const std::vector<Vertex>& vs) {
  std::vector<Vertex> out;
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

}  // namespace

double pattern_density(const Graph& g) {
  const double n = g.num_vertices();
  if (n < 2) return 0.0;
  return 2.0 * static_cast<double>(g.num_edges()) / (n * (n - 1.0));
}

int run_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = load(cmd.input);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  SolveResult result;
  try {
    result = solve(g, cmd.params);
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const InfeasibleBounds& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const RunReport report = make_report(cmd.input.path.string(), g, cmd.params, result, seconds);
  if (auto problems = check_report(g, report); !problems.empty()) {
    for (const auto& p : problems) err << "validation: " << p << '\n';
    return kValidationFailure;
  }
  if (cmd.output == OutputFormat::kJson) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_plain(report);
  }
  return kOk;
}

int run_oracle(const OracleCommand& cmd, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = load(cmd.input);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (g.num_vertices() > kMaxBruteForceVertices) {
    err << "error: oracle handles at most " << kMaxBruteForceVertices << " vertices, graph has "
        << g.num_vertices() << '\n';
    return kTooLarge;
  }
  if (auto issues = validate(g); !issues.empty()) {
    err << "error: invalid graph: " << issues.front().message << '\n';
    return kInputError;
  }
  SumBounds bounds;
  try {
    cmd.params.check();
    bounds = balance_bounds(g.total_size(), cmd.params);
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  OracleResult res;
  try {
    res = brute_force_vsp(g, bounds, bounds);
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kTooLarge;
  }

  if (cmd.output == OutputFormat::kJson) {
    nlohmann::json j;
    j["input_path"] = cmd.input.path.string();
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["bounds"] = {{"lower", bounds.lower}, {"upper", bounds.upper}};
    j["feasible"] = res.feasible();
    if (res.feasible()) {
      j["optimal_weight"] = *res.optimal_weight;
      j["a"] = one_based(res.witness->a);
      j["b"] = one_based(res.witness->b);
      j["separator"] = one_based(res.witness->separator);
    } else {
      j["optimal_weight"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else if (!res.feasible()) {
    out << "infeasible\n";
  } else {
    out << "optimal_weight: " << *res.optimal_weight << '\n';
    out << "separator: " << join_one_based(res.witness->separator) << '\n';
    out << "a: " << join_one_based(res.witness->a) << '\n';
    out << "b: " << join_one_based(res.witness->b) << '\n';
  }
  return kOk;
}

std::vector<ManifestRow> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  std::vector<ManifestRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    ManifestRow row;
    std::string p;
    if (!(fields >> row.name >> p >> row.expected_n >> row.reference_separator >> row.ratio_threshold)) {
      throw ParseError("manifest line " + std::to_string(line_no) +
                       ": expected 'name path expected_n reference_sep ratio_threshold'");
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError("manifest line " + std::to_string(line_no) + ": trailing field '" + extra + "'");
    }
    row.path = p;
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_bench(const BenchCommand& cmd, std::ostream& out, std::ostream& err) {
  std::vector<ManifestRow> rows;
  try {
    rows = read_manifest(cmd.manifest);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const std::filesystem::path base = cmd.data_dir ? *cmd.data_dir : cmd.manifest.parent_path();
  for (auto& row : rows) {
    if (row.path.is_relative()) row.path = base / row.path;
  }

  std::vector<std::string> missing;
  for (const auto& row : rows) {
    if (!std::filesystem::exists(row.path)) missing.push_back(row.name + " (" + row.path.string() + ")");
  }
  if (!missing.empty()) {
    err << "error: missing benchmark graphs:\n";
    for (const auto& m : missing) err << "  " << m << '\n';
    return kInputError;
  }

  out << std::left << std::setw(14) << "problem" << std::right << std::setw(8) << "n"
      << std::setw(16) << "nnz/(n(n-1))" << std::setw(8) << "|S|" << std::setw(10) << "ref|S|"
      << std::setw(8) << "ratio" << std::setw(10) << "time_s" << "  status\n";

  bool all_ok = true;
  for (const auto& row : rows) {
    std::string status = "ok";
    Vertex n = 0;
    double density = 0.0;
    Weight obtained = -1;
    double seconds = 0.0;
    try {
      const Graph g = load({row.path, std::nullopt});
      n = g.num_vertices();
      density = pattern_density(g);
      const auto t0 = std::chrono::steady_clock::now();
      const SolveResult result = solve(g, cmd.params);
      seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const RunReport report = make_report(row.path.string(), g, cmd.params, result, seconds);
      obtained = report.separator_weight;
      if (!check_report(g, report).empty()) {
        status = "INVALID";
      } else if (n != row.expected_n) {
        status = "N-MISMATCH";
      } else if (static_cast<double>(obtained) >
                 row.ratio_threshold * static_cast<double>(row.reference_separator)) {
        status = "ABOVE-RATIO";
      }
    } catch (const std::exception& e) {
      status = std::string("ERROR: ") + e.what();
    }
    if (status != "ok") all_ok = false;
    const double ratio =
        row.reference_separator > 0 ? static_cast<double>(obtained) / row.reference_separator : 0.0;
    out << std::left << std::setw(14) << row.name << std::right << std::setw(8) << n
        << std::setw(16) << std::fixed << std::setprecision(5) << density << std::setw(8)
        << obtained << std::setw(10) << row.reference_separator << std::setw(8)
        << std::setprecision(3) << ratio << std::setw(10) << std::setprecision(2) << seconds
        << "  " << status << '\n';
    out.unsetf(std::ios::fixed);
  }
  return all_ok ? kOk : kFailure;
}

namespace {

void add_solver_flags(CLI::App& app, SolveParams& params) {
  app.add_option("--ub-frac", params.ub_fraction, "Upper size bound as a fraction of n")
      ->capture_default_str();
  app.add_option("--lb", params.lower_bound, "Lower size bound for both sides")
      ->capture_default_str();
}

void add_multilevel_flags(CLI::App& app, SolveParams& params) {
  app.add_option("--coarsest-size", params.coarsest_size, "Stop coarsening at this many vertices")
      ->capture_default_str();
  app.add_option("--gamma-steps", params.gamma_steps, "Penalty reduction steps in the escape phase")
      ->capture_default_str();
  app.add_option("--multistarts", params.multistarts, "Random starts at the coarsest level")
      ->capture_default_str();
  app.add_option("--seed", params.seed, "Random seed")->capture_default_str();
  app.add_option("--max-levels", params.max_levels, "Cap on hierarchy depth")->capture_default_str();
  app.add_flag("--random-matching-order", params.random_matching_order,
               "Visit vertices in seeded random order when matching");
}

const std::map<std::string, GraphFormat> kFormats{{"mtx", GraphFormat::kMatrixMarket},
                                                   {"metis", GraphFormat::kMetis}};
const std::map<std::string, OutputFormat> kOutputs{{"plain", OutputFormat::kPlain},
                                                    {"json", OutputFormat::kJson}};

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multilevel vertex separator solver with bilinear-program refinement", "vsp"};
  app.require_subcommand(1);

  SolveCommand solve_cmd;
  std::string solve_input;
  GraphFormat solve_format{};
  auto* solve_app = app.add_subcommand("solve", "Compute a vertex separator");
  solve_app->add_option("input", solve_input, "Graph file (.mtx or .graph)")->required();
  auto* solve_format_opt = solve_app->add_option("--format", solve_format, "mtx or metis")
                               ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  solve_app->add_option("--output", solve_cmd.output, "plain or json")
      ->transform(CLI::CheckedTransformer(kOutputs, CLI::ignore_case));
  add_solver_flags(*solve_app, solve_cmd.params);
  add_multilevel_flags(*solve_app, solve_cmd.params);

  OracleCommand oracle_cmd;
  std::string oracle_input;
  GraphFormat oracle_format{};
  auto* oracle_app = app.add_subcommand("oracle", "Exact separator by enumeration (n <= 16)");
  oracle_app->add_option("input", oracle_input, "Graph file (.mtx or .graph)")->required();
  auto* oracle_format_opt = oracle_app->add_option("--format", oracle_format, "mtx or metis")
                                ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  oracle_app->add_option("--output", oracle_cmd.output, "plain or json")
      ->transform(CLI::CheckedTransformer(kOutputs, CLI::ignore_case));
  add_solver_flags(*oracle_app, oracle_cmd.params);

  BenchCommand bench_cmd;
  std::string manifest;
  std::string data_dir;
  auto* bench_app = app.add_subcommand("bench", "Run the solver over a manifest of graphs");
  bench_app->add_option("manifest", manifest, "Manifest: name path expected_n reference_sep ratio")
      ->required();
  auto* data_dir_opt =
      bench_app->add_option("--data-dir", data_dir, "Base directory for relative graph paths");
  add_solver_flags(*bench_app, bench_cmd.params);
  add_multilevel_flags(*bench_app, bench_cmd.params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  if (solve_app->parsed()) {
    solve_cmd.input.path = solve_input;
    if (*solve_format_opt) solve_cmd.input.format = solve_format;
    return run_solve(solve_cmd, out, err);
  }
  if (oracle_app->parsed()) {
    oracle_cmd.input.path = oracle_input;
    if (*oracle_format_opt) oracle_cmd.input.format = oracle_format;
    return run_oracle(oracle_cmd, out, err);
  }
  bench_cmd.manifest = manifest;
  if (*data_dir_opt) bench_cmd.data_dir = std::filesystem::path(data_dir);
  return run_bench(bench_cmd, out, err);
}

}  // namespace vsp::tools
