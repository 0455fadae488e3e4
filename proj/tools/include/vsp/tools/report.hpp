#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vsp/graph.hpp"
#include "vsp/multilevel.hpp"

namespace vsp::tools {

struct LevelRecord {
  int level = 0;
  Vertex n = 0;
  double objective_before = 0.0;
  double objective_after = 0.0;
  int escapes = 0;
  Weight separator_weight = 0;
  bool kept_prolonged = false;
  friend bool operator==(const LevelRecord&, const LevelRecord&) = default;
};

/// Result of one `vsp solve` run. Vertex ids are 1-based, as in the input
/// files.
struct RunReport {
  std::string input_path;
  Vertex n = 0;
  std::size_t m = 0;
  SolveParams params;
  SumBounds bounds;
  Weight separator_weight = 0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::size_t size_s = 0;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<Vertex> separator;
  std::vector<LevelRecord> trace;
  double wall_time_seconds = 0.0;

  friend bool operator==(const RunReport&, const RunReport&);
};

RunReport make_report(const std::string& input_path, const Graph& g, const SolveParams& params,
                      const SolveResult& result, double wall_time_seconds);

/// Re-checks a report against the loaded graph, independently of the solver:
/// sizes add up to n, A/B/S partition the vertices, no A-B edge, balance
/// bounds and separator weight. Returns one message per problem.
std::vector<std::string> check_report(const Graph& g, const RunReport& report);

nlohmann::json to_json(const RunReport& report, bool include_wall_time = true);
RunReport report_from_json(const nlohmann::json& j);

std::string to_plain(const RunReport& report);

}  // namespace vsp::tools
