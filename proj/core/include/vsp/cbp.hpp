#pragma once

#include <functional>
#include <span>
#include <vector>

#include "vsp/graph.hpp"
#include "vsp/interaction_matrix.hpp"
#include "vsp/partition.hpp"

namespace vsp {

/// Objective comparisons treat differences at or below this as ties.
inline constexpr double kObjectiveTolerance = 1e-9;

/// One level's bilinear program
///
///   max  c^T (x + y) - gamma * x^T B y
///   s.t. 0 <= x, y <= 1,  la <= s^T x <= ua,  lb <= s^T y <= ub.
///
/// B generalizes A + I to aggregated levels and s generalizes the all-ones
/// vector. gamma0 is max_i c_i.
class CbpInstance {
 public:
  CbpInstance(InteractionMatrix interaction, std::vector<Weight> cost, std::vector<Weight> size,
              SumBounds a_bounds, SumBounds b_bounds);

  /// B = A + I, costs and sizes taken from the graph.
  static CbpInstance from_graph(const Graph& g, SumBounds a_bounds, SumBounds b_bounds);

  Vertex dim() const { return interaction_.dim(); }
  const InteractionMatrix& interaction() const { return interaction_; }
  std::span<const Weight> cost() const { return cost_; }
  std::span<const Weight> size() const { return size_; }
  SumBounds a_bounds() const { return a_bounds_; }
  SumBounds b_bounds() const { return b_bounds_; }
  Weight total_size() const { return total_size_; }
  double gamma0() const { return gamma0_; }

 private:
  InteractionMatrix interaction_;
  std::vector<Weight> cost_;
  std::vector<Weight> size_;
  SumBounds a_bounds_;
  SumBounds b_bounds_;
  Weight total_size_ = 0;
  double gamma0_ = 0.0;
};

/// Relaxed incidence vectors of A (x) and B (y).
struct Point {
  std::vector<double> x;
  std::vector<double> y;

  static Point zeros(Vertex n) {
    return {std::vector<double>(static_cast<std::size_t>(n), 0.0),
            std::vector<double>(static_cast<std::size_t>(n), 0.0)};
  }
  friend bool operator==(const Point&, const Point&) = default;
};

/// c^T (x + y) - gamma * x^T B y. Throws DimensionMismatch.
double objective(const CbpInstance& inst, const Point& p, double gamma);

/// Box and sum constraints, up to kObjectiveTolerance on the sums. Overlap
/// between x and y is allowed.
bool feasible(const CbpInstance& inst, const Point& p);

/// Maximizes g^T v over 0 <= v <= 1, l <= s^T v <= u (a fractional knapsack).
/// Items are taken in order of decreasing g_i / s_i, lower index first on
/// ties. The result has at most one fractional coordinate. Throws
/// InfeasibleBounds when l > u or l > s^T 1.
std::vector<double> solve_block_lp(std::span<const double> g, std::span<const Weight> s, Weight l,
                                   Weight u);

enum class Block { kX, kY };

/// Reported after each block update of the alternating refinement.
struct BlockStep {
  Block block = Block::kX;
  double gamma = 0.0;
  double before = 0.0;
  double after = 0.0;
};

using StepObserver = std::function<void(const BlockStep&)>;

struct RefineOptions {
  double tolerance = kObjectiveTolerance;
  int max_sweeps = 100000;
  StepObserver observer;
};

/// Alternating block maximization at a fixed gamma. Each block is replaced by
/// its LP solution when that gains more than the tolerance (or when the
/// current block violates its sum bounds); the loop stops after a sweep that
/// gains no more than the tolerance.
Point refine(const CbpInstance& inst, Point p, double gamma, const RefineOptions& options = {});

struct EscapeOptions {
  int gamma_steps = 10;
  int max_escapes = 100000;
  RefineOptions refine;
};

struct EscapeStats {
  int escapes = 0;
  int attempts = 0;
};

/// Leaves local maxima by refining at gamma_k = gamma0 (1 - k/K), k = 1..K,
/// then re-refining at gamma0. A strict gain at gamma0 is accepted and the
/// schedule restarts from k = 1. Returns a blockwise fixed point at gamma0
/// whose objective is no lower than the input's.
Point escape(const CbpInstance& inst, Point p, const EscapeOptions& options = {},
             EscapeStats* stats = nullptr);

/// Moves a feasible point to a binary, feasible, orthogonal (x^T B y = 0)
/// point without lowering the objective at gamma0.
///
/// Throws InfeasiblePoint if p is infeasible and DegenerateRepair when the
/// bounds leave no such move.
Point round_to_binary(const CbpInstance& inst, Point p);

/// A = {x_i = 1}, B = {y_i = 1}, S = the rest. Throws NotBinary,
/// NotOrthogonal or InfeasiblePoint.
Partition extract_partition(const CbpInstance& inst, const Point& p);

bool is_binary(const Point& p);

/// s^T v.
double weighted_sum(std::span<const Weight> s, std::span<const double> v);

}  // namespace vsp
