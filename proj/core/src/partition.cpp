#include "vsp/partition.hpp"

#include <algorithm>

namespace vsp {

std::vector<std::string> check_partition(const Graph& g, const Partition& p, SumBounds a_bounds,
                                         SumBounds b_bounds) {
  std::vector<std::string> out;
  const Vertex n = g.num_vertices();
  enum Side : char { kNone, kA, kB, kS };
  std::vector<char> side(static_cast<std::size_t>(n), kNone);

  auto place = [&](const std::vector<Vertex>& set, Side s, const char* name) {
    if (!std::is_sorted(set.begin(), set.end())) out.push_back(std::string(name) + " not sorted");
    for (Vertex v : set) {
      if (v < 0 || v >= n) {
        out.push_back(std::string(name) + " holds out-of-range vertex " + std::to_string(v));
        continue;
      }
      if (side[v] != kNone) {
        out.push_back("vertex " + std::to_string(v) + " assigned twice");
        continue;
      }
      side[v] = s;
    }
  };
  place(p.a, kA, "A");
  place(p.b, kB, "B");
  place(p.separator, kS, "S");

  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == kNone) out.push_back("vertex " + std::to_string(v) + " unassigned");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] != kA) continue;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.vertex >= 0 && nb.vertex < n && side[nb.vertex] == kB) {
        out.push_back("edge between A and B: (" + std::to_string(v) + ", " +
                      std::to_string(nb.vertex) + ")");
      }
    }
  }

  Weight size_a = 0;
  Weight size_b = 0;
  Weight weight_s = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == kA) size_a += g.size(v);
    if (side[v] == kB) size_b += g.size(v);
    if (side[v] == kS) weight_s += g.cost(v);
  }
  if (size_a < a_bounds.lower || size_a > a_bounds.upper) {
    out.push_back("size(A) = " + std::to_string(size_a) + " outside [" +
                  std::to_string(a_bounds.lower) + ", " + std::to_string(a_bounds.upper) + "]");
  }
  if (size_b < b_bounds.lower || size_b > b_bounds.upper) {
    out.push_back("size(B) = " + std::to_string(size_b) + " outside [" +
                  std::to_string(b_bounds.lower) + ", " + std::to_string(b_bounds.upper) + "]");
  }
  if (weight_s != p.separator_weight) {
    out.push_back("separator weight recorded as " + std::to_string(p.separator_weight) +
                  ", actual " + std::to_string(weight_s));
  }
  return out;
}

}  // namespace vsp
