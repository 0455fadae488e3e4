#include "vsp/tools/report.hpp"

#include <sstream>

namespace vsp::tools {
namespace {

std::vector<Vertex> one_based(const std::vector<Vertex>& vs) {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

std::vector<Vertex> zero_based(const std::vector<Vertex>& vs) {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(v - 1);
  return out;
}

bool same_params(const SolveParams& x, const SolveParams& y) {
  return x.ub_fraction == y.ub_fraction && x.lower_bound == y.lower_bound &&
         x.coarsest_size == y.coarsest_size && x.gamma_steps == y.gamma_steps &&
         x.multistarts == y.multistarts && x.seed == y.seed && x.max_levels == y.max_levels &&
         x.random_matching_order == y.random_matching_order;
}

}  // namespace

bool operator==(const RunReport& x, const RunReport& y) {
  return x.input_path == y.input_path && x.n == y.n && x.m == y.m &&
         same_params(x.params, y.params) && x.bounds == y.bounds &&
         x.separator_weight == y.separator_weight && x.size_a == y.size_a &&
         x.size_b == y.size_b && x.size_s == y.size_s && x.a == y.a && x.b == y.b &&
         x.separator == y.separator && x.trace == y.trace &&
         x.wall_time_seconds == y.wall_time_seconds;
}

RunReport make_report(const std::string& input_path, const Graph& g, const SolveParams& params,
                      const SolveResult& result, double wall_time_seconds) {
  RunReport r;
  r.input_path = input_path;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.params = params;
  r.bounds = result.bounds;
  r.separator_weight = result.partition.separator_weight;
  r.size_a = result.partition.a.size();
  r.size_b = result.partition.b.size();
  r.size_s = result.partition.separator.size();
  r.a = one_based(result.partition.a);
  r.b = one_based(result.partition.b);
  r.separator = one_based(result.partition.separator);
  for (const LevelTrace& t : result.trace) {
    r.trace.push_back({t.level, t.n, t.objective_before, t.objective_after, t.escapes,
                       t.separator_weight, t.kept_prolonged});
  }
  r.wall_time_seconds = wall_time_seconds;
  return r;
}

std::vector<std::string> check_report(const Graph& g, const RunReport& report) {
  std::vector<std::string> out;
  if (report.n != g.num_vertices()) out.push_back("n does not match the graph");
  if (report.size_a + report.size_b + report.size_s != static_cast<std::size_t>(g.num_vertices())) {
    out.push_back("|A| + |B| + |S| != n");
  }
  if (report.size_a != report.a.size() || report.size_b != report.b.size() ||
      report.size_s != report.separator.size()) {
    out.push_back("recorded sizes disagree with vertex lists");
  }
  Partition p{zero_based(report.a), zero_based(report.b), zero_based(report.separator),
              report.separator_weight};
  for (auto& msg : check_partition(g, p, report.bounds, report.bounds)) out.push_back(std::move(msg));
  return out;
}

nlohmann::json to_json(const RunReport& r, bool include_wall_time) {
  nlohmann::json j;
  j["input_path"] = r.input_path;
  j["n"] = r.n;
  j["m"] = r.m;
  j["params"] = {{"ub_frac", r.params.ub_fraction},
                 {"lb", r.params.lower_bound},
                 {"coarsest_size", r.params.coarsest_size},
                 {"gamma_steps", r.params.gamma_steps},
                 {"multistarts", r.params.multistarts},
                 {"seed", r.params.seed},
                 {"max_levels", r.params.max_levels},
                 {"random_matching_order", r.params.random_matching_order}};
  j["bounds"] = {{"lower", r.bounds.lower}, {"upper", r.bounds.upper}};
  j["separator_weight"] = r.separator_weight;
  j["size_a"] = r.size_a;
  j["size_b"] = r.size_b;
  j["size_s"] = r.size_s;
  j["a"] = r.a;
  j["b"] = r.b;
  j["separator"] = r.separator;
  auto trace = nlohmann::json::array();
  for (const LevelRecord& t : r.trace) {
    trace.push_back({{"level", t.level},
                     {"n", t.n},
                     {"objective_before", t.objective_before},
                     {"objective_after", t.objective_after},
                     {"escapes", t.escapes},
                     {"separator_weight", t.separator_weight},
                     {"kept_prolonged", t.kept_prolonged}});
  }
  j["trace"] = std::move(trace);
  if (include_wall_time) j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

RunReport report_from_json(const nlohmann::json& j) {
  RunReport r;
  j.at("input_path").get_to(r.input_path);
  j.at("n").get_to(r.n);
  j.at("m").get_to(r.m);
  const auto& p = j.at("params");
  p.at("ub_frac").get_to(r.params.ub_fraction);
  p.at("lb").get_to(r.params.lower_bound);
  p.at("coarsest_size").get_to(r.params.coarsest_size);
  p.at("gamma_steps").get_to(r.params.gamma_steps);
  p.at("multistarts").get_to(r.params.multistarts);
  p.at("seed").get_to(r.params.seed);
  p.at("max_levels").get_to(r.params.max_levels);
  p.at("random_matching_order").get_to(r.params.random_matching_order);
  j.at("bounds").at("lower").get_to(r.bounds.lower);
  j.at("bounds").at("upper").get_to(r.bounds.upper);
  j.at("separator_weight").get_to(r.separator_weight);
  j.at("size_a").get_to(r.size_a);
  j.at("size_b").get_to(r.size_b);
  j.at("size_s").get_to(r.size_s);
  j.at("a").get_to(r.a);
  j.at("b").get_to(r.b);
  j.at("separator").get_to(r.separator);
  for (const auto& t : j.at("trace")) {
    LevelRecord rec;
    t.at("level").get_to(rec.level);
    t.at("n").get_to(rec.n);
    t.at("objective_before").get_to(rec.objective_before);
    t.at("objective_after").get_to(rec.objective_after);
    t.at("escapes").get_to(rec.escapes);
    t.at("separator_weight").get_to(rec.separator_weight);
    t.at("kept_prolonged").get_to(rec.kept_prolonged);
    r.trace.push_back(rec);
  }
  if (j.contains("wall_time_seconds")) j.at("wall_time_seconds").get_to(r.wall_time_seconds);
  return r;
}

std::string to_plain(const RunReport& r) {
  std::ostringstream out;
  auto list = [&](const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  };
  out << "input: " << r.input_path << '\n';
  out << "n: " << r.n << '\n';
  out << "m: " << r.m << '\n';
  out << "bounds: [" << r.bounds.lower << ", " << r.bounds.upper << "]\n";
  out << "separator_weight: " << r.separator_weight << '\n';
  out << "size_a: " << r.size_a << '\n';
  out << "size_b: " << r.size_b << '\n';
  out << "size_s: " << r.size_s << '\n';
  out << "separator: ";
  list(r.separator);
  out << '\n';
  out << "levels:\n";
  for (const LevelRecord& t : r.trace) {
    out << "  level " << t.level << ": n=" << t.n << " objective " << t.objective_before << " -> "
        << t.objective_after << " escapes=" << t.escapes
        << " separator_weight=" << t.separator_weight << (t.kept_prolonged ? " (kept prolonged)" : "")
        << '\n';
  }
  out << "wall_time_s: " << r.wall_time_seconds << '\n';
  return out.str();
}

}  // namespace vsp::tools
