#include "vsp/cbp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "vsp/errors.hpp"

namespace vsp {
namespace {

void check_dims(const CbpInstance& inst, const Point& p) {
  const auto n = static_cast<std::size_t>(inst.dim());
  if (p.x.size() != n || p.y.size() != n) {
    throw DimensionMismatch("point has dimension (" + std::to_string(p.x.size()) + ", " +
                            std::to_string(p.y.size()) + "), instance has " + std::to_string(n));
  }
}

bool in_bounds(double sum, SumBounds b) {
  return sum >= static_cast<double>(b.lower) - kObjectiveTolerance &&
         sum <= static_cast<double>(b.upper) + kObjectiveTolerance;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// c - gamma * B v
std::vector<double> block_gradient(const CbpInstance& inst, std::span<const double> other,
                                   double gamma) {
  std::vector<double> g = inst.interaction().multiply(other);
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = static_cast<double>(inst.cost()[i]) - gamma * g[i];
  }
  return g;
}

}  // namespace

CbpInstance::CbpInstance(InteractionMatrix interaction, std::vector<Weight> cost,
                         std::vector<Weight> size, SumBounds a_bounds, SumBounds b_bounds)
    : interaction_(std::move(interaction)),
      cost_(std::move(cost)),
      size_(std::move(size)),
      a_bounds_(a_bounds),
      b_bounds_(b_bounds) {
  const auto n = static_cast<std::size_t>(interaction_.dim());
  if (cost_.size() != n || size_.size() != n) {
    throw DimensionMismatch("CbpInstance: cost/size length differs from matrix dimension");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cost_[i] < 0) throw std::invalid_argument("CbpInstance: negative cost");
    if (size_[i] < 1) throw std::invalid_argument("CbpInstance: size must be >= 1");
  }
  total_size_ = std::accumulate(size_.begin(), size_.end(), Weight{0});
  for (SumBounds b : {a_bounds_, b_bounds_}) {
    if (b.lower < 0 || b.lower > b.upper || b.upper > total_size_) {
      throw InfeasibleBounds("CbpInstance: bounds [" + std::to_string(b.lower) + ", " +
                             std::to_string(b.upper) + "] invalid for total size " +
                             std::to_string(total_size_));
    }
  }
  gamma0_ = cost_.empty() ? 0.0 : static_cast<double>(*std::max_element(cost_.begin(), cost_.end()));
}

CbpInstance CbpInstance::from_graph(const Graph& g, SumBounds a_bounds, SumBounds b_bounds) {
  return CbpInstance(InteractionMatrix::adjacency_plus_identity(g),
                     std::vector<Weight>(g.costs().begin(), g.costs().end()),
                     std::vector<Weight>(g.sizes().begin(), g.sizes().end()), a_bounds, b_bounds);
}

double weighted_sum(std::span<const Weight> s, std::span<const double> v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) acc += static_cast<double>(s[i]) * v[i];
  return acc;
}

bool is_binary(const Point& p) {
  auto binary = [](double v) { return v == 0.0 || v == 1.0; };
  return std::all_of(p.x.begin(), p.x.end(), binary) &&
         std::all_of(p.y.begin(), p.y.end(), binary);
}

double objective(const CbpInstance& inst, const Point& p, double gamma) {
  check_dims(inst, p);
  double linear = 0.0;
  for (Vertex i = 0; i < inst.dim(); ++i) {
    linear += static_cast<double>(inst.cost()[i]) * (p.x[i] + p.y[i]);
  }
  return linear - gamma * inst.interaction().bilinear(p.x, p.y);
}

bool feasible(const CbpInstance& inst, const Point& p) {
  const auto n = static_cast<std::size_t>(inst.dim());
  if (p.x.size() != n || p.y.size() != n) return false;
  auto in_box = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!std::all_of(p.x.begin(), p.x.end(), in_box)) return false;
  if (!std::all_of(p.y.begin(), p.y.end(), in_box)) return false;
  return in_bounds(weighted_sum(inst.size(), p.x), inst.a_bounds()) &&
         in_bounds(weighted_sum(inst.size(), p.y), inst.b_bounds());
}

std::vector<double> solve_block_lp(std::span<const double> g, std::span<const Weight> s, Weight l,
                                   Weight u) {
  if (g.size() != s.size()) throw DimensionMismatch("solve_block_lp: g and s differ in length");
  const Weight total = std::accumulate(s.begin(), s.end(), Weight{0});
  if (l > u || l > total) {
    throw InfeasibleBounds("solve_block_lp: bounds [" + std::to_string(l) + ", " +
                           std::to_string(u) + "] with total size " + std::to_string(total));
  }

  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // g_i / s_i > g_j / s_j  <=>  g_i * s_j > g_j * s_i  (s > 0)
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return g[i] * static_cast<double>(s[j]) > g[j] * static_cast<double>(s[i]);
  });

  std::vector<double> v(g.size(), 0.0);
  Weight sum = 0;
  bool full = false;
  std::size_t k = 0;
  for (; k < order.size(); ++k) {
    const std::size_t i = order[k];
    if (g[i] <= 0.0) break;
    if (sum + s[i] <= u) {
      v[i] = 1.0;
      sum += s[i];
      if (sum == u) {
        full = true;
        ++k;
        break;
      }
    } else {
      v[i] = static_cast<double>(u - sum) / static_cast<double>(s[i]);
      full = true;
      ++k;
      break;
    }
  }
  if (!full && sum < l) {
    for (; k < order.size() && sum < l; ++k) {
      const std::size_t i = order[k];
      if (sum + s[i] <= l) {
        v[i] = 1.0;
        sum += s[i];
      } else {
        v[i] = static_cast<double>(l - sum) / static_cast<double>(s[i]);
        sum = l;
      }
    }
  }
  return v;
}

Point refine(const CbpInstance& inst, Point p, double gamma, const RefineOptions& options) {
  check_dims(inst, p);
  double f = objective(inst, p, gamma);

  auto update = [&](Block block) {
    auto& free = block == Block::kX ? p.x : p.y;
    const auto& fixed = block == Block::kX ? p.y : p.x;
    const SumBounds bounds = block == Block::kX ? inst.a_bounds() : inst.b_bounds();
    const std::vector<double> g = block_gradient(inst, fixed, gamma);
    std::vector<double> candidate =
        solve_block_lp(g, inst.size(), bounds.lower, bounds.upper);

    const bool current_ok = in_bounds(weighted_sum(inst.size(), free), bounds);
    if (!current_ok || dot(g, candidate) > dot(g, free) + options.tolerance) {
      free = std::move(candidate);
    }
    const double after = objective(inst, p, gamma);
    if (options.observer) options.observer({block, gamma, f, after});
    f = after;
  };

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    const double start = f;
    update(Block::kX);
    update(Block::kY);
    if (f - start <= options.tolerance) break;
  }
  return p;
}

Point escape(const CbpInstance& inst, Point p, const EscapeOptions& options, EscapeStats* stats) {
  check_dims(inst, p);
  if (options.gamma_steps < 1) throw std::invalid_argument("escape: gamma_steps must be >= 1");
  const double gamma0 = inst.gamma0();
  const double tol = options.refine.tolerance;
  double best = objective(inst, p, gamma0);
  int escapes = 0;
  int attempts = 0;

  int k = 1;
  while (k <= options.gamma_steps && escapes < options.max_escapes) {
    const double gamma =
        gamma0 * (1.0 - static_cast<double>(k) / static_cast<double>(options.gamma_steps));
    Point trial = refine(inst, p, gamma, options.refine);
    trial = refine(inst, std::move(trial), gamma0, options.refine);
    ++attempts;
    const double value = objective(inst, trial, gamma0);
    if (value > best + tol) {
      p = std::move(trial);
      best = value;
      ++escapes;
      k = 1;
    } else {
      ++k;
    }
  }
  if (stats != nullptr) {
    stats->escapes += escapes;
    stats->attempts += attempts;
  }
  return p;
}

Partition extract_partition(const CbpInstance& inst, const Point& p) {
  check_dims(inst, p);
  if (!is_binary(p)) throw NotBinary("extract_partition: point is not binary");
  if (inst.interaction().bilinear(p.x, p.y) != 0.0) {
    throw NotOrthogonal("extract_partition: x^T B y != 0");
  }
  if (!feasible(inst, p)) throw InfeasiblePoint("extract_partition: sum bounds violated");

  Partition out;
  for (Vertex i = 0; i < inst.dim(); ++i) {
    if (p.x[i] == 1.0) {
      out.a.push_back(i);
    } else if (p.y[i] == 1.0) {
      out.b.push_back(i);
    } else {
      out.separator.push_back(i);
      out.separator_weight += inst.cost()[i];
    }
  }
  return out;
}

}  // namespace vsp
