#include "vsp/multilevel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "vsp/errors.hpp"
#include "vsp/oracle.hpp"

namespace vsp {
namespace {

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

// Greedy subset in the given order with size sum in [lower, target], skipping
// vertices already in `taken`. Returns false if the lower bound is missed.
bool fill_side(std::span<const Vertex> order, std::span<const Weight> size, Weight lower,
               Weight target, const std::vector<double>* taken, std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  Weight sum = 0;
  for (Vertex v : order) {
    if (sum == target) break;
    if (taken != nullptr && (*taken)[v] == 1.0) continue;
    if (sum + size[v] <= target) {
      out[v] = 1.0;
      sum += size[v];
    }
  }
  return sum >= lower;
}

// Vertices in breadth-first order from a random root, restarting from a
// random unvisited vertex when a component is exhausted.
std::vector<Vertex> bfs_order(const InteractionMatrix& B, std::span<const Vertex> shuffled) {
  const Vertex n = B.dim();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (Vertex root : shuffled) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      const Vertex v = order[head++];
      for (const auto& e : B.row(v)) {
        if (!seen[e.col]) {
          seen[e.col] = 1;
          order.push_back(e.col);
        }
      }
    }
  }
  return order;
}

// A random binary point inside the sum bounds; y avoids x where it can. With
// `grow` set, each side is a breadth-first region around a random root
// rather than a scattered random subset.
std::optional<Point> random_start(const CbpInstance& inst, std::mt19937_64& rng, bool grow) {
  const Vertex n = inst.dim();
  std::vector<Vertex> shuffled(static_cast<std::size_t>(n));
  std::iota(shuffled.begin(), shuffled.end(), Vertex{0});

  auto next_order = [&] {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    return grow ? bfs_order(inst.interaction(), shuffled) : shuffled;
  };

  Point p = Point::zeros(n);
  auto draw = [&](SumBounds b, std::span<const Vertex> order, const std::vector<double>* taken,
                  std::vector<double>& out) {
    std::uniform_int_distribution<Weight> pick(b.lower, b.upper);
    const Weight target = pick(rng);
    return fill_side(order, inst.size(), b.lower, target, taken, out) ||
           fill_side(order, inst.size(), b.lower, b.upper, taken, out);
  };
  if (!draw(inst.a_bounds(), next_order(), nullptr, p.x)) return std::nullopt;

  std::vector<Vertex> order = next_order();
  if (grow) {
    // Root the y region outside x.
    std::stable_partition(order.begin(), order.end(), [&](Vertex v) { return p.x[v] == 0.0; });
    std::vector<Vertex> roots(order.begin(), order.end());
    order = bfs_order(inst.interaction(), roots);
  }
  if (!draw(inst.b_bounds(), order, &p.x, p.y) && !draw(inst.b_bounds(), order, nullptr, p.y)) {
    return std::nullopt;
  }
  return p;
}

Point point_from_partition(Vertex n, const Partition& part) {
  Point p = Point::zeros(n);
  for (Vertex v : part.a) p.x[v] = 1.0;
  for (Vertex v : part.b) p.y[v] = 1.0;
  return p;
}

Weight separator_weight(const CbpInstance& inst, const Point& p) {
  Weight w = 0;
  for (Vertex i = 0; i < inst.dim(); ++i) {
    if (p.x[i] == 0.0 && p.y[i] == 0.0) w += inst.cost()[i];
  }
  return w;
}

EscapeOptions escape_options(const SolveParams& params) {
  EscapeOptions opts;
  opts.gamma_steps = params.gamma_steps;
  return opts;
}

}  // namespace

void SolveParams::check() const {
  if (!(ub_fraction > 0.0 && ub_fraction <= 1.0)) {
    throw std::invalid_argument("ub_fraction must lie in (0, 1]");
  }
  if (lower_bound < 0) throw std::invalid_argument("lower bound must be >= 0");
  if (coarsest_size < 2) throw std::invalid_argument("coarsest size must be >= 2");
  if (gamma_steps < 1) throw std::invalid_argument("gamma steps must be >= 1");
  if (multistarts < 1) throw std::invalid_argument("multistarts must be >= 1");
  if (max_levels < 1) throw std::invalid_argument("max levels must be >= 1");
}

SumBounds balance_bounds(Weight total_size, const SolveParams& params) {
  // The epsilon keeps products such as 0.503 * 1000 from flooring to 502.
  const auto upper =
      static_cast<Weight>(std::floor(params.ub_fraction * static_cast<double>(total_size) + 1e-9));
  if (upper < params.lower_bound) {
    throw Infeasible("upper bound floor(" + std::to_string(params.ub_fraction) + " * " +
                     std::to_string(total_size) + ") = " + std::to_string(upper) +
                     " is below the lower bound " + std::to_string(params.lower_bound));
  }
  return {params.lower_bound, upper};
}

Matching heavy_edge_matching(const Graph& g, std::span<const Vertex> order) {
  const Vertex n = g.num_vertices();
  std::vector<char> matched(static_cast<std::size_t>(n), 0);
  Matching m;
  for (Vertex v : order) {
    if (matched[v]) continue;
    Vertex best = -1;
    Weight best_weight = 0;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (matched[nb.vertex] || nb.vertex == v) continue;
      if (best < 0 || nb.weight > best_weight) {
        best = nb.vertex;
        best_weight = nb.weight;
      }
    }
    matched[v] = 1;
    if (best < 0) {
      m.singletons.push_back(v);
    } else {
      matched[best] = 1;
      m.pairs.emplace_back(v, best);
    }
  }
  return m;
}

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.num_vertices()));
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  return order;
}

std::vector<Vertex> random_order(Vertex n, std::uint64_t seed) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Vertex{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

Level make_finest_level(const Graph& g, SumBounds a_bounds, SumBounds b_bounds) {
  return Level{g, CbpInstance::from_graph(g, a_bounds, b_bounds), {}};
}

Level contract(const Level& fine, const Matching& m) {
  const Graph& g = fine.graph;
  const Vertex n = g.num_vertices();

  std::vector<std::vector<Vertex>> groups;
  groups.reserve(m.pairs.size() + m.singletons.size());
  for (auto [u, v] : m.pairs) groups.push_back({std::min(u, v), std::max(u, v)});
  for (Vertex v : m.singletons) groups.push_back({v});
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<Vertex> coarse_of(static_cast<std::size_t>(n), -1);
  for (std::size_t I = 0; I < groups.size(); ++I) {
    for (Vertex v : groups[I]) {
      if (v < 0 || v >= n || coarse_of[v] != -1) {
        throw std::invalid_argument("contract: matching does not partition the vertex set");
      }
      coarse_of[v] = static_cast<Vertex>(I);
    }
  }
  if (std::find(coarse_of.begin(), coarse_of.end(), -1) != coarse_of.end()) {
    throw std::invalid_argument("contract: matching misses a vertex");
  }

  const auto cn = static_cast<Vertex>(groups.size());
  std::vector<Weight> cost(groups.size(), 0);
  std::vector<Weight> size(groups.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    cost[coarse_of[v]] += g.cost(v);
    size[coarse_of[v]] += g.size(v);
  }

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.vertex <= u) continue;
      const Vertex I = coarse_of[u];
      const Vertex J = coarse_of[nb.vertex];
      if (I != J) edges.push_back({I, J, nb.weight});
    }
  }
  Graph coarse_graph = Graph::from_edges(cn, edges, DuplicateEdges::kSum, cost, size);

  using Entry = InteractionMatrix::Entry;
  std::vector<std::vector<Entry>> rows(groups.size());
  const auto& B = fine.instance.interaction();
  for (Vertex i = 0; i < n; ++i) {
    auto& row = rows[coarse_of[i]];
    for (const Entry& e : B.row(i)) row.push_back({coarse_of[e.col], e.value});
  }
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    std::vector<Entry> merged;
    for (const Entry& e : row) {
      if (!merged.empty() && merged.back().col == e.col) {
        merged.back().value += e.value;
      } else {
        merged.push_back(e);
      }
    }
    row = std::move(merged);
  }

  CbpInstance inst(InteractionMatrix(std::move(rows)), cost, size, fine.instance.a_bounds(),
                   fine.instance.b_bounds());
  return Level{std::move(coarse_graph), std::move(inst), std::move(groups)};
}

Point prolong(const Level& coarse, const Point& p) {
  if (coarse.is_finest()) return p;
  const auto cn = coarse.groups.size();
  if (p.x.size() != cn || p.y.size() != cn) {
    throw DimensionMismatch("prolong: point does not match the coarse level");
  }
  std::size_t fine_n = 0;
  for (const auto& group : coarse.groups) fine_n += group.size();
  Point out{std::vector<double>(fine_n, 0.0), std::vector<double>(fine_n, 0.0)};
  for (std::size_t I = 0; I < cn; ++I) {
    for (Vertex v : coarse.groups[I]) {
      out.x[v] = p.x[I];
      out.y[v] = p.y[I];
    }
  }
  return out;
}

Hierarchy build_hierarchy(const Graph& g, const SolveParams& params) {
  params.check();
  const SumBounds bounds = balance_bounds(g.total_size(), params);
  Hierarchy h;
  h.params = params;
  h.levels.push_back(make_finest_level(g, bounds, bounds));

  while (static_cast<int>(h.levels.size()) < params.max_levels &&
         h.levels.back().graph.num_vertices() > params.coarsest_size) {
    const Graph& current = h.levels.back().graph;
    const Vertex n = current.num_vertices();
    const std::vector<Vertex> order =
        params.random_matching_order
            ? random_order(n, params.seed + static_cast<std::uint64_t>(h.levels.size()))
            : degree_order(current);
    const Matching m = heavy_edge_matching(current, order);
    const auto coarse_n = static_cast<double>(m.pairs.size() + m.singletons.size());
    if (coarse_n > 0.95 * static_cast<double>(n)) break;
    Level next = contract(h.levels.back(), m);
    h.levels.push_back(std::move(next));
  }
  return h;
}

Point solve_coarsest(const Level& level, const SolveParams& params) {
  const CbpInstance& inst = level.instance;
  const double gamma0 = inst.gamma0();
  const EscapeOptions opts = escape_options(params);

  std::optional<Point> best;
  double best_value = 0.0;
  auto offer = [&](Point p) {
    const double value = objective(inst, p, gamma0);
    if (!best || value > best_value + kObjectiveTolerance) {
      best = std::move(p);
      best_value = value;
    }
  };

  for (int r = 0; r < params.multistarts; ++r) {
    auto rng = stream_rng(params.seed, static_cast<std::uint64_t>(r));
    std::optional<Point> start = random_start(inst, rng, r % 2 == 0);
    if (!start) continue;
    Point p = refine(inst, std::move(*start), gamma0, opts.refine);
    p = escape(inst, std::move(p), opts);
    try {
      offer(round_to_binary(inst, std::move(p)));
    } catch (const DegenerateRepair&) {
      continue;
    }
  }

  if (inst.dim() <= params.brute_force_limit) {
    const OracleResult exact = brute_force_vsp(level.graph, inst.a_bounds(), inst.b_bounds());
    if (exact.feasible()) offer(point_from_partition(inst.dim(), *exact.witness));
  }
  if (!best) {
    throw Infeasible("no binary orthogonal point satisfies the sum bounds at the coarsest level (n = " +
                     std::to_string(inst.dim()) + ")");
  }
  return *best;
}

SolveResult solve(const Graph& g, const SolveParams& params) {
  if (auto issues = validate(g); !issues.empty()) {
    throw std::invalid_argument("solve: invalid graph: " + issues.front().message);
  }
  const Hierarchy h = build_hierarchy(g, params);
  const EscapeOptions opts = escape_options(params);

  SolveResult result;
  result.bounds = h.levels.front().instance.a_bounds();

  // Contraction can leave a coarsest graph so dense that no start survives
  // rounding; fall back one level finer until a start is found.
  int coarsest = static_cast<int>(h.levels.size()) - 1;
  Point p;
  for (;; --coarsest) {
    try {
      p = solve_coarsest(h.levels[coarsest], params);
      break;
    } catch (const Infeasible&) {
      if (coarsest == 0) throw;
    }
  }
  {
    const CbpInstance& inst = h.levels[coarsest].instance;
    const double f = objective(inst, p, inst.gamma0());
    result.trace.push_back({coarsest, inst.dim(), f, f, 0, separator_weight(inst, p), false});
  }

  for (int l = coarsest - 1; l >= 0; --l) {
    const CbpInstance& inst = h.levels[l].instance;
    const double gamma0 = inst.gamma0();
    Point start = prolong(h.levels[l + 1], p);
    LevelTrace t;
    t.level = l;
    t.n = inst.dim();
    t.objective_before = objective(inst, start, gamma0);

    EscapeStats stats;
    Point q = refine(inst, start, gamma0, opts.refine);
    q = escape(inst, std::move(q), opts, &stats);
    try {
      q = round_to_binary(inst, std::move(q));
    } catch (const DegenerateRepair&) {
      q = start;
      t.kept_prolonged = true;
    }
    if (objective(inst, q, gamma0) < t.objective_before - kObjectiveTolerance) {
      q = start;
      t.kept_prolonged = true;
    }
    p = std::move(q);
    t.objective_after = objective(inst, p, gamma0);
    t.escapes = stats.escapes;
    t.separator_weight = separator_weight(inst, p);
    result.trace.push_back(t);
  }

  result.partition = extract_partition(h.levels.front().instance, p);
  return result;
}

}  // namespace vsp
