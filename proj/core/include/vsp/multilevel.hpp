#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vsp/cbp.hpp"
#include "vsp/graph.hpp"
#include "vsp/partition.hpp"

namespace vsp {

struct SolveParams {
  double ub_fraction = 0.503;
  Weight lower_bound = 1;
  Vertex coarsest_size = 64;
  int gamma_steps = 10;
  int multistarts = 20;
  std::uint64_t seed = 0;
  int max_levels = 64;
  // Visit vertices in a seeded random order instead of ascending degree.
  bool random_matching_order = false;
  // Brute force at the coarsest level when it has at most this many vertices.
  Vertex brute_force_limit = 12;

  /// Throws std::invalid_argument on out-of-range fields.
  void check() const;
};

/// u = floor(ub_fraction * total_size) for both sides, l = lower_bound.
/// Throws Infeasible when u < l.
SumBounds balance_bounds(Weight total_size, const SolveParams& params);

struct Matching {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Vertex> singletons;
};

/// Visits vertices in order; each unmatched vertex takes the unmatched
/// neighbor with the heaviest edge (lowest index on ties).
Matching heavy_edge_matching(const Graph& g, std::span<const Vertex> order);

/// Ascending degree, lowest index first on ties.
std::vector<Vertex> degree_order(const Graph& g);
std::vector<Vertex> random_order(Vertex n, std::uint64_t seed);

struct Level {
  Graph graph;
  CbpInstance instance;
  // groups[I] lists the finer-level vertices aggregated into vertex I.
  // Empty on the finest level.
  std::vector<std::vector<Vertex>> groups;

  bool is_finest() const { return groups.empty(); }
};

Level make_finest_level(const Graph& g, SumBounds a_bounds, SumBounds b_bounds);

/// Aggregates each pair and singleton into one coarse vertex. Coarse vertices
/// are numbered by their smallest member. Costs, sizes, edge weights and the
/// interaction matrix are summed over groups, so objectives and sums carry
/// over exactly under prolong().
Level contract(const Level& fine, const Matching& m);

/// Copies each coarse value to every member of its group.
Point prolong(const Level& coarse, const Point& p);

struct Hierarchy {
  std::vector<Level> levels;  // finest first
  SolveParams params;
};

/// Coarsens while the current level exceeds params.coarsest_size and a
/// matching shrinks it by at least 5%.
Hierarchy build_hierarchy(const Graph& g, const SolveParams& params);

/// Best binary orthogonal point from seeded multistarts (refine, escape,
/// round), backed by exhaustive search on tiny levels. Throws Infeasible.
Point solve_coarsest(const Level& level, const SolveParams& params);

struct LevelTrace {
  int level = 0;
  Vertex n = 0;
  double objective_before = 0.0;
  double objective_after = 0.0;
  int escapes = 0;
  Weight separator_weight = 0;
  // Rounding failed at this level and the prolonged point was kept.
  bool kept_prolonged = false;
};

struct SolveResult {
  Partition partition;
  SumBounds bounds;
  std::vector<LevelTrace> trace;  // coarsest first
};

SolveResult solve(const Graph& g, const SolveParams& params);

}  // namespace vsp
