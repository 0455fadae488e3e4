#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "vsp/cbp.hpp"
#include "vsp/errors.hpp"

namespace vsp {
namespace {

constexpr double kSnap = 1e-12;

double snap(double v) {
  if (v < kSnap) return 0.0;
  if (v > 1.0 - kSnap) return 1.0;
  return v;
}

bool fractional(double v) { return v > 0.0 && v < 1.0; }

// Moves coordinate i by +t*s_k and coordinate k by -t*s_i (sign = +1), or the
// reverse (sign = -1), as far as the box allows. s^T v is unchanged.
void pair_step(std::vector<double>& v, std::span<const Weight> s, std::size_t i, std::size_t k,
               int sign) {
  const double si = static_cast<double>(s[i]);
  const double sk = static_cast<double>(s[k]);
  if (sign > 0) {
    const double ti = (1.0 - v[i]) / sk;
    const double tk = v[k] / si;
    if (ti <= tk) {
      v[k] = snap(v[k] - ti * si);
      v[i] = 1.0;
    } else {
      v[i] = snap(v[i] + tk * sk);
      v[k] = 0.0;
    }
  } else {
    const double ti = v[i] / sk;
    const double tk = (1.0 - v[k]) / si;
    if (ti <= tk) {
      v[k] = snap(v[k] + ti * si);
      v[i] = 0.0;
    } else {
      v[i] = snap(v[i] - tk * sk);
      v[k] = 1.0;
    }
  }
}

// Moves the lone fractional coordinate i toward a box bound along the given
// direction, stopping at a sum bound. Returns true if i became binary.
bool single_step(std::vector<double>& v, std::span<const Weight> s, SumBounds bounds,
                 std::size_t i, int direction) {
  const double si = static_cast<double>(s[i]);
  const double sum = weighted_sum(s, v);
  if (direction > 0) {
    const double room = std::max(0.0, (static_cast<double>(bounds.upper) - sum) / si);
    if (room >= 1.0 - v[i] - kSnap) {
      v[i] = 1.0;
      return true;
    }
    v[i] = snap(v[i] + room);
  } else {
    const double room = std::max(0.0, (sum - static_cast<double>(bounds.lower)) / si);
    if (room >= v[i] - kSnap) {
      v[i] = 0.0;
      return true;
    }
    v[i] = snap(v[i] - room);
  }
  return !fractional(v[i]);
}

// Makes v binary without lowering grad^T v and without leaving the box or
// the sum bounds.
void defractionalize(std::vector<double>& v, std::span<const double> grad,
                     std::span<const Weight> s, SumBounds bounds, const char* block) {
  for (double& value : v) value = snap(value);
  const std::size_t n = v.size();
  // Each pair step fixes at least one coordinate; the budget only guards the
  // single-coordinate pairing branch against cycling on ties.
  std::size_t single_budget = 2 * n + 2;

  while (true) {
    std::size_t first = n;
    std::size_t second = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!fractional(v[i])) continue;
      if (first == n) {
        first = i;
      } else {
        second = i;
        break;
      }
    }
    if (first == n) return;

    if (second != n) {
      const double derivative = static_cast<double>(s[second]) * grad[first] -
                                static_cast<double>(s[first]) * grad[second];
      pair_step(v, s, first, second, derivative >= 0.0 ? +1 : -1);
      continue;
    }

    if (single_budget-- == 0) {
      throw DegenerateRepair(std::string("round_to_binary: no progress on ") + block +
                             " coordinate " + std::to_string(first));
    }
    const std::size_t i = first;
    std::vector<int> directions;
    if (grad[i] > 0.0) {
      directions = {+1};
    } else if (grad[i] < 0.0) {
      directions = {-1};
    } else {
      directions = {-1, +1};
    }
    bool done = false;
    for (int d : directions) {
      if (single_step(v, s, bounds, i, d)) {
        done = true;
        break;
      }
    }
    if (done) continue;

    // Stuck on a sum bound: trade against a binary coordinate k. Raising i
    // needs v_k = 1, lowering i needs v_k = 0; the move must not lower the
    // objective.
    bool moved = false;
    for (int d : directions.size() == 1 ? std::vector<int>{directions[0], -directions[0]}
                                        : directions) {
      for (std::size_t k = 0; k < n && !moved; ++k) {
        if (k == i) continue;
        if (d > 0 && v[k] != 1.0) continue;
        if (d < 0 && v[k] != 0.0) continue;
        const double derivative = d * (static_cast<double>(s[k]) * grad[i] -
                                       static_cast<double>(s[i]) * grad[k]);
        if (derivative < 0.0) continue;
        pair_step(v, s, i, k, d);
        moved = true;
      }
      if (moved) break;
    }
    if (!moved) {
      throw DegenerateRepair(std::string("round_to_binary: ") + block + " coordinate " +
                             std::to_string(i) + " is pinned by the sum bounds");
    }
  }
}

}  // namespace

Point round_to_binary(const CbpInstance& inst, Point p) {
  if (!feasible(inst, p)) throw InfeasiblePoint("round_to_binary: input point is infeasible");
  const double gamma0 = inst.gamma0();
  const auto& B = inst.interaction();
  const auto cost = inst.cost();
  const auto size = inst.size();

  auto gradient = [&](const std::vector<double>& other) {
    std::vector<double> g = B.multiply(other);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = static_cast<double>(cost[i]) - gamma0 * g[i];
    return g;
  };

  defractionalize(p.x, gradient(p.y), size, inst.a_bounds(), "x");
  defractionalize(p.y, gradient(p.x), size, inst.b_bounds(), "y");

  // Orthogonality repair. Values only go from 1 to 0, so one ordered pass
  // clears every interacting pair.
  Weight sum_x = 0;
  Weight sum_y = 0;
  for (Vertex i = 0; i < inst.dim(); ++i) {
    if (p.x[i] == 1.0) sum_x += size[i];
    if (p.y[i] == 1.0) sum_y += size[i];
  }
  for (Vertex i = 0; i < inst.dim(); ++i) {
    if (p.x[i] != 1.0) continue;
    for (const auto& e : B.row(i)) {
      const Vertex j = e.col;
      if (p.y[j] != 1.0) continue;
      const bool drop_x_ok = sum_x - size[i] >= inst.a_bounds().lower;
      const bool drop_y_ok = sum_y - size[j] >= inst.b_bounds().lower;
      if (!drop_x_ok && !drop_y_ok) {
        throw DegenerateRepair("round_to_binary: removing either of x_" + std::to_string(i) +
                               ", y_" + std::to_string(j) + " breaks a lower bound");
      }
      const bool drop_x = drop_x_ok && (!drop_y_ok || cost[i] < cost[j]);
      if (drop_x) {
        p.x[i] = 0.0;
        sum_x -= size[i];
        break;
      }
      p.y[j] = 0.0;
      sum_y -= size[j];
    }
  }
  return p;
}

}  // namespace vsp
