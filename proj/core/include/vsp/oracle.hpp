#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vsp/graph.hpp"
#include "vsp/partition.hpp"

namespace vsp {

inline constexpr Vertex kMaxBruteForceVertices = 16;
inline constexpr std::size_t kMaxBruteForceLpDim = 12;

struct OracleResult {
  std::optional<Weight> optimal_weight;  // empty when infeasible
  std::optional<Partition> witness;

  bool feasible() const { return optimal_weight.has_value(); }
};

/// Exact vertex separator by enumerating all 3^n side assignments, taking
/// vertex sizes for the bounds and vertex costs for the weight. Among optimal
/// assignments the lexicographically smallest wins (vertex 0 most
/// significant, A < B < S). Throws TooLarge for n > 16.
OracleResult brute_force_vsp(const Graph& g, SumBounds a_bounds, SumBounds b_bounds);

struct LpOracleResult {
  double value = 0.0;
  std::vector<double> witness;
};

/// Maximizes g^T v over {0 <= v <= 1, l <= s^T v <= u} by enumerating every
/// candidate vertex of the polytope: binary vectors within the bounds, and
/// binary vectors with one coordinate adjusted to land exactly on l or u.
/// Throws TooLarge for n > 12 and InfeasibleBounds for empty polytopes.
LpOracleResult brute_force_lp(std::span<const double> g, std::span<const Weight> s, Weight l,
                              Weight u);

}  // namespace vsp
