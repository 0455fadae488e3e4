#pragma once

#include <string>
#include <vector>

#include "vsp/graph.hpp"

namespace vsp {

/// Inclusive bounds on the size (sum of vertex sizes) of one side.
struct SumBounds {
  Weight lower = 0;
  Weight upper = 0;
  friend bool operator==(const SumBounds&, const SumBounds&) = default;
};

/// A vertex separator: sides A and B with no edge between them, and the
/// separator S holding every remaining vertex. Vertex lists are ascending.
struct Partition {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<Vertex> separator;
  Weight separator_weight = 0;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Checks a partition against the graph's own adjacency: disjoint cover of
/// the vertex set, no A-B edge, size bounds, and the recorded separator
/// weight. Returns one message per breach.
std::vector<std::string> check_partition(const Graph& g, const Partition& p, SumBounds a_bounds,
                                         SumBounds b_bounds);

}  // namespace vsp
