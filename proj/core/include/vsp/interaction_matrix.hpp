#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vsp/graph.hpp"

namespace vsp {

/// Symmetric sparse matrix with positive integer entries, row-compressed with
/// sorted column indices. On the finest level it holds A + I; on coarse
/// levels the aggregated sums of the finer matrix.
class InteractionMatrix {
 public:
  struct Entry {
    Vertex col = 0;
    Weight value = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  InteractionMatrix() = default;

  /// Rows must already be sorted by column. Symmetry and positivity are
  /// checked; violations throw std::invalid_argument.
  explicit InteractionMatrix(std::vector<std::vector<Entry>> rows);

  /// Edge weights off the diagonal, 1 on the diagonal.
  static InteractionMatrix adjacency_plus_identity(const Graph& g);

  Vertex dim() const { return static_cast<Vertex>(offsets_.size() - 1); }
  std::size_t nonzeros() const { return entries_.size(); }

  std::span<const Entry> row(Vertex i) const {
    return {entries_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  /// 0 when (i, j) is not stored.
  Weight at(Vertex i, Vertex j) const;

  std::vector<double> multiply(std::span<const double> v) const;

  /// x^T M y by sparse traversal.
  double bilinear(std::span<const double> x, std::span<const double> y) const;

  friend bool operator==(const InteractionMatrix&, const InteractionMatrix&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Entry> entries_;
};

}  // namespace vsp
