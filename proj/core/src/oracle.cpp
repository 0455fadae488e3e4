#include "vsp/oracle.hpp"

#include <numeric>
#include <string>

#include "vsp/errors.hpp"

namespace vsp {

OracleResult brute_force_vsp(const Graph& g, SumBounds a_bounds, SumBounds b_bounds) {
  const Vertex n = g.num_vertices();
  if (n > kMaxBruteForceVertices) {
    throw TooLarge("brute_force_vsp: n = " + std::to_string(n) + " exceeds " +
                   std::to_string(kMaxBruteForceVertices));
  }
  enum : char { kA = 0, kB = 1, kS = 2 };
  std::vector<char> label(static_cast<std::size_t>(n), kA);
  std::vector<char> best_label;
  std::optional<Weight> best;

  while (true) {
    Weight size_a = 0;
    Weight size_b = 0;
    Weight weight = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (label[v] == kA) size_a += g.size(v);
      if (label[v] == kB) size_b += g.size(v);
      if (label[v] == kS) weight += g.cost(v);
    }
    bool ok = size_a >= a_bounds.lower && size_a <= a_bounds.upper &&
              size_b >= b_bounds.lower && size_b <= b_bounds.upper &&
              (!best || weight < *best);
    for (Vertex v = 0; v < n && ok; ++v) {
      if (label[v] != kA) continue;
      for (const Neighbor& nb : g.neighbors(v)) {
        if (label[nb.vertex] == kB) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      best = weight;
      best_label = label;
    }

    // Odometer with vertex n-1 as the least significant digit, so
    // assignments are visited in lexicographic order.
    Vertex pos = n - 1;
    while (pos >= 0 && label[pos] == kS) {
      label[pos] = kA;
      --pos;
    }
    if (pos < 0) break;
    ++label[pos];
  }

  OracleResult result;
  if (!best) return result;
  result.optimal_weight = best;
  Partition p;
  for (Vertex v = 0; v < n; ++v) {
    if (best_label[v] == kA) p.a.push_back(v);
    if (best_label[v] == kB) p.b.push_back(v);
    if (best_label[v] == kS) p.separator.push_back(v);
  }
  p.separator_weight = *best;
  result.witness = std::move(p);
  return result;
}

LpOracleResult brute_force_lp(std::span<const double> g, std::span<const Weight> s, Weight l,
                              Weight u) {
  const std::size_t n = g.size();
  if (n > kMaxBruteForceLpDim) {
    throw TooLarge("brute_force_lp: n = " + std::to_string(n) + " exceeds " +
                   std::to_string(kMaxBruteForceLpDim));
  }
  const Weight total = std::accumulate(s.begin(), s.end(), Weight{0});
  if (l > u || l > total || u < 0) {
    throw InfeasibleBounds("brute_force_lp: empty polytope");
  }

  LpOracleResult best;
  bool found = false;
  std::vector<double> v(n);
  auto consider = [&](const std::vector<double>& cand) {
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i) value += g[i] * cand[i];
    if (!found || value > best.value) {
      best.value = value;
      best.witness = cand;
      found = true;
    }
  };

  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Weight sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = (mask >> i) & 1u ? 1.0 : 0.0;
      if (v[i] == 1.0) sum += s[i];
    }
    if (sum >= l && sum <= u) consider(v);
    for (std::size_t i = 0; i < n; ++i) {
      const Weight rest = sum - (v[i] == 1.0 ? s[i] : 0);
      for (Weight target : {l, u}) {
        const double t = static_cast<double>(target - rest) / static_cast<double>(s[i]);
        if (t > 0.0 && t < 1.0) {
          std::vector<double> w = v;
          w[i] = t;
          consider(w);
        }
      }
    }
  }
  return best;
}

}  // namespace vsp
