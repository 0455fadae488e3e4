#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vsp {

using Vertex = std::int32_t;
using Weight = std::int64_t;

struct Neighbor {
  Vertex vertex = 0;
  Weight weight = 1;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
  friend auto operator<=>(const Neighbor&, const Neighbor&) = default;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight weight = 1;
};

// How Graph::from_edges treats an edge that appears more than once.
enum class DuplicateEdges { kCollapse, kSum };

/// Sparse undirected graph with weighted edges, per-vertex costs and
/// per-vertex sizes, stored as sorted CSR neighbor lists.
///
/// Construction does not enforce the simple-graph invariants so that
/// malformed inputs can be represented and reported by validate(). Graphs
/// produced by the file loaders and by from_edges() always validate cleanly.
class Graph {
 public:
  Graph() = default;

  /// Unit costs and unit sizes.
  explicit Graph(std::vector<std::vector<Neighbor>> adjacency);
  Graph(std::vector<std::vector<Neighbor>> adjacency, std::vector<Weight> cost,
        std::vector<Weight> size);

  /// Builds a simple graph from an undirected edge list. Each edge is
  /// inserted in both directions. Self-loops are rejected with
  /// std::invalid_argument.
  static Graph from_edges(Vertex n, std::span<const Edge> edges,
                          DuplicateEdges duplicates = DuplicateEdges::kCollapse,
                          std::vector<Weight> cost = {},
                          std::vector<Weight> size = {});

  Vertex num_vertices() const { return static_cast<Vertex>(cost_.size()); }

  /// Number of undirected edges (half the number of adjacency entries).
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  Weight cost(Vertex v) const { return cost_[v]; }
  Weight size(Vertex v) const { return size_[v]; }
  std::span<const Weight> costs() const { return cost_; }
  std::span<const Weight> sizes() const { return size_; }
  Weight total_size() const;
  Weight total_cost() const;

  /// Weight of edge (u, v), or 0 when absent.
  Weight edge_weight(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> neighbors_;
  std::vector<Weight> cost_;
  std::vector<Weight> size_;
};

struct Violation {
  std::string message;
};

/// One entry per breached invariant; empty iff the graph is simple,
/// symmetric and has positive edge weights, positive sizes and nonnegative
/// costs. Vertex ids in messages are 0-based.
std::vector<Violation> validate(const Graph& g);

}  // namespace vsp
