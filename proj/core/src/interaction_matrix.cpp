#include "vsp/interaction_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vsp {

InteractionMatrix::InteractionMatrix(std::vector<std::vector<Entry>> rows) {
  offsets_.assign(rows.size() + 1, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) offsets_[i + 1] = offsets_[i] + rows[i].size();
  entries_.reserve(offsets_.back());
  for (const auto& r : rows) entries_.insert(entries_.end(), r.begin(), r.end());

  const auto n = static_cast<Vertex>(rows.size());
  for (Vertex i = 0; i < n; ++i) {
    auto r = row(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k].col < 0 || r[k].col >= n) {
        throw std::invalid_argument("InteractionMatrix: column out of range in row " +
                                    std::to_string(i));
      }
      if (k > 0 && r[k - 1].col >= r[k].col) {
        throw std::invalid_argument("InteractionMatrix: row " + std::to_string(i) +
                                    " not strictly sorted");
      }
      if (r[k].value < 1) {
        throw std::invalid_argument("InteractionMatrix: entries must be >= 1");
      }
    }
    if (at(i, i) < 1) {
      throw std::invalid_argument("InteractionMatrix: missing diagonal at " + std::to_string(i));
    }
  }
  for (Vertex i = 0; i < n; ++i) {
    for (const Entry& e : row(i)) {
      if (at(e.col, i) != e.value) {
        throw std::invalid_argument("InteractionMatrix: not symmetric at (" + std::to_string(i) +
                                    ", " + std::to_string(e.col) + ")");
      }
    }
  }
}

InteractionMatrix InteractionMatrix::adjacency_plus_identity(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) {
    auto& r = rows[i];
    r.reserve(g.degree(i) + 1);
    bool diagonal_placed = false;
    for (const Neighbor& nb : g.neighbors(i)) {
      if (!diagonal_placed && nb.vertex > i) {
        r.push_back({i, 1});
        diagonal_placed = true;
      }
      r.push_back({nb.vertex, nb.weight});
    }
    if (!diagonal_placed) r.push_back({i, 1});
  }
  return InteractionMatrix(std::move(rows));
}

Weight InteractionMatrix::at(Vertex i, Vertex j) const {
  auto r = row(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, Vertex c) { return e.col < c; });
  return (it != r.end() && it->col == j) ? it->value : 0;
}

std::vector<double> InteractionMatrix::multiply(std::span<const double> v) const {
  std::vector<double> out(static_cast<std::size_t>(dim()), 0.0);
  for (Vertex i = 0; i < dim(); ++i) {
    double acc = 0.0;
    for (const Entry& e : row(i)) acc += static_cast<double>(e.value) * v[e.col];
    out[i] = acc;
  }
  return out;
}

double InteractionMatrix::bilinear(std::span<const double> x, std::span<const double> y) const {
  double total = 0.0;
  for (Vertex i = 0; i < dim(); ++i) {
    if (x[i] == 0.0) continue;
    double acc = 0.0;
    for (const Entry& e : row(i)) acc += static_cast<double>(e.value) * y[e.col];
    total += x[i] * acc;
  }
  return total;
}

}  // namespace vsp
