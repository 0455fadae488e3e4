#include "vsp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace vsp {

Graph::Graph(std::vector<std::vector<Neighbor>> adjacency)
    : Graph(adjacency, std::vector<Weight>(adjacency.size(), 1),
            std::vector<Weight>(adjacency.size(), 1)) {}

Graph::Graph(std::vector<std::vector<Neighbor>> adjacency,
             std::vector<Weight> cost, std::vector<Weight> size)
    : cost_(std::move(cost)), size_(std::move(size)) {
  if (cost_.size() != adjacency.size() || size_.size() != adjacency.size()) {
    throw std::invalid_argument("Graph: cost/size length differs from vertex count");
  }
  offsets_.assign(adjacency.size() + 1, 0);
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    offsets_[v + 1] = offsets_[v] + adjacency[v].size();
  }
  neighbors_.reserve(offsets_.back());
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    neighbors_.insert(neighbors_.end(), list.begin(), list.end());
  }
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges,
                        DuplicateEdges duplicates, std::vector<Weight> cost,
                        std::vector<Weight> size) {
  if (n < 0) throw std::invalid_argument("Graph::from_edges: negative vertex count");
  std::vector<std::vector<Neighbor>> adjacency(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("Graph::from_edges: endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("Graph::from_edges: self-loop");
    adjacency[e.u].push_back({e.v, e.weight});
    adjacency[e.v].push_back({e.u, e.weight});
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    std::vector<Neighbor> merged;
    merged.reserve(list.size());
    for (const Neighbor& nb : list) {
      if (!merged.empty() && merged.back().vertex == nb.vertex) {
        if (duplicates == DuplicateEdges::kSum) merged.back().weight += nb.weight;
        continue;
      }
      merged.push_back(nb);
    }
    list = std::move(merged);
  }
  if (cost.empty()) cost.assign(static_cast<std::size_t>(n), 1);
  if (size.empty()) size.assign(static_cast<std::size_t>(n), 1);
  return Graph(std::move(adjacency), std::move(cost), std::move(size));
}

Weight Graph::total_size() const {
  return std::accumulate(size_.begin(), size_.end(), Weight{0});
}

Weight Graph::total_cost() const {
  return std::accumulate(cost_.begin(), cost_.end(), Weight{0});
}

Weight Graph::edge_weight(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
  return (it != list.end() && it->vertex == v) ? it->weight : 0;
}

std::vector<Violation> validate(const Graph& g) {
  std::vector<Violation> out;
  const Vertex n = g.num_vertices();
  auto name = [](Vertex v) { return std::to_string(v); };

  for (Vertex v = 0; v < n; ++v) {
    if (g.size(v) < 1) out.push_back({"nonpositive size: " + name(v)});
    if (g.cost(v) < 0) out.push_back({"negative cost: " + name(v)});

    auto list = g.neighbors(v);
    for (std::size_t k = 0; k < list.size(); ++k) {
      const Neighbor& nb = list[k];
      if (nb.vertex < 0 || nb.vertex >= n) {
        out.push_back({"neighbor out of range: (" + name(v) + ", " + name(nb.vertex) + ")"});
        continue;
      }
      if (nb.vertex == v) {
        out.push_back({"self-loop: " + name(v)});
        continue;
      }
      if (k > 0 && list[k - 1].vertex == nb.vertex) {
        out.push_back({"duplicate edge: (" + name(v) + ", " + name(nb.vertex) + ")"});
        continue;
      }
      if (nb.weight < 1) {
        out.push_back({"nonpositive edge weight: (" + name(v) + ", " + name(nb.vertex) + ")"});
      }
      if (g.edge_weight(nb.vertex, v) != nb.weight) {
        out.push_back({"asymmetric: (" + name(v) + ", " + name(nb.vertex) + ")"});
      }
    }
  }
  return out;
}

}  // namespace vsp
