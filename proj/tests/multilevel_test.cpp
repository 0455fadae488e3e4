#include <gtest/gtest.h>

#include <random>

#include "test_graphs.hpp"
#include "vsp/errors.hpp"
#include "vsp/multilevel.hpp"
#include "vsp/oracle.hpp"

namespace vsp {
namespace {

using testing::complete_graph;
using testing::path_graph;

bool matching_is_valid(const Graph& g, const Matching& m) {
  std::vector<int> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  for (auto [u, v] : m.pairs) {
    if (g.edge_weight(u, v) == 0) return false;
    ++seen[u];
    ++seen[v];
  }
  for (Vertex v : m.singletons) ++seen[v];
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

TEST(Matching, PathInGivenOrder) {
  const std::vector<Vertex> order{0, 1, 2};
  const Matching m = heavy_edge_matching(path_graph(3), order);
  ASSERT_EQ(m.pairs.size(), 1u);
  EXPECT_EQ(m.pairs[0], std::make_pair(Vertex{0}, Vertex{1}));
  EXPECT_EQ(m.singletons, std::vector<Vertex>{2});
}

TEST(Matching, CycleTieGoesToLowestIndex) {
  const std::vector<Vertex> order{0, 1, 2, 3};
  const Matching m = heavy_edge_matching(testing::cycle_graph(4), order);
  ASSERT_EQ(m.pairs.size(), 2u);
  EXPECT_EQ(m.pairs[0], std::make_pair(Vertex{0}, Vertex{1}));
  EXPECT_EQ(m.pairs[1], std::make_pair(Vertex{2}, Vertex{3}));
  EXPECT_TRUE(m.singletons.empty());
}

TEST(Matching, EdgelessAllSingletons) {
  const Graph g = testing::edgeless_graph(5);
  const Matching m = heavy_edge_matching(g, degree_order(g));
  EXPECT_TRUE(m.pairs.empty());
  EXPECT_EQ(m.singletons.size(), 5u);
}

TEST(Matching, PrefersHeavyEdge) {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1, 1}, {0, 2, 5}}, DuplicateEdges::kSum);
  const std::vector<Vertex> order{0, 1, 2};
  const Matching m = heavy_edge_matching(g, order);
  EXPECT_EQ(m.pairs.at(0), std::make_pair(Vertex{0}, Vertex{2}));
}

TEST(Matching, RandomGraphsProduceValidMatchings) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(5 + static_cast<Vertex>(rng() % 60), 0.1, rng());
    EXPECT_TRUE(matching_is_valid(g, heavy_edge_matching(g, degree_order(g))));
    EXPECT_TRUE(matching_is_valid(g, heavy_edge_matching(g, random_order(g.num_vertices(), rng()))));
  }
}

TEST(DegreeOrder, AscendingWithIndexTies) {
  EXPECT_EQ(degree_order(path_graph(4)), (std::vector<Vertex>{0, 3, 1, 2}));
}

// Sum of (A + I) entries over group pairs, computed densely.
std::vector<std::vector<double>> aggregate(const std::vector<std::vector<double>>& fine,
                                           const std::vector<std::vector<Vertex>>& groups) {
  std::vector<std::vector<double>> out(groups.size(), std::vector<double>(groups.size(), 0.0));
  for (std::size_t I = 0; I < groups.size(); ++I) {
    for (std::size_t J = 0; J < groups.size(); ++J) {
      for (Vertex p : groups[I]) {
        for (Vertex q : groups[J]) out[I][J] += fine[p][q];
      }
    }
  }
  return out;
}

TEST(Contract, PathPair) {
  const Graph g = path_graph(3);
  const Level fine = make_finest_level(g, {0, 3}, {0, 3});
  const Level coarse = contract(fine, Matching{{{0, 1}}, {2}});
  const auto& B = coarse.instance.interaction();
  ASSERT_EQ(coarse.instance.dim(), 2);

  const auto expected = aggregate(testing::dense_a_plus_i(g), coarse.groups);
  EXPECT_EQ(expected[0][0], 4.0);
  EXPECT_EQ(expected[0][1], 1.0);
  EXPECT_EQ(expected[1][1], 1.0);
  for (Vertex I = 0; I < 2; ++I) {
    for (Vertex J = 0; J < 2; ++J) EXPECT_EQ(static_cast<double>(B.at(I, J)), expected[I][J]);
  }
  EXPECT_EQ(std::vector<Weight>(coarse.instance.cost().begin(), coarse.instance.cost().end()),
            (std::vector<Weight>{2, 1}));
  EXPECT_EQ(std::vector<Weight>(coarse.instance.size().begin(), coarse.instance.size().end()),
            (std::vector<Weight>{2, 1}));
  EXPECT_EQ(coarse.graph.edge_weight(0, 1), 1);
  EXPECT_EQ(coarse.instance.gamma0(), 2.0);
  EXPECT_TRUE(validate(coarse.graph).empty());
}

TEST(Contract, CompleteTwoToOneVertex) {
  const Level fine = make_finest_level(complete_graph(2), {0, 2}, {0, 2});
  const Level coarse = contract(fine, Matching{{{0, 1}}, {}});
  EXPECT_EQ(coarse.instance.dim(), 1);
  EXPECT_EQ(coarse.instance.cost()[0], 2);
  EXPECT_EQ(coarse.instance.interaction().at(0, 0), 4);
}

TEST(Contract, AllSingletonsIsIdentity) {
  const Graph g = testing::random_graph(15, 0.3, 8);
  const Level fine = make_finest_level(g, {1, 7}, {1, 7});
  Matching m;
  for (Vertex v = 0; v < 15; ++v) m.singletons.push_back(v);
  const Level coarse = contract(fine, m);
  EXPECT_EQ(coarse.graph, g);
  EXPECT_EQ(coarse.instance.interaction(), fine.instance.interaction());

  Point p = Point::zeros(15);
  p.x[3] = 0.25;
  p.y[7] = 1.0;
  EXPECT_EQ(prolong(coarse, p), p);
}

TEST(Prolong, CopiesAggregateValues) {
  const Level fine = make_finest_level(path_graph(3), {0, 3}, {0, 3});
  const Level coarse = contract(fine, Matching{{{0, 1}}, {2}});
  const Point q = prolong(coarse, Point{{1, 0}, {0, 1}});
  EXPECT_EQ(q.x, (std::vector<double>{1, 1, 0}));
  EXPECT_EQ(q.y, (std::vector<double>{0, 0, 1}));
  EXPECT_EQ(prolong(coarse, Point::zeros(2)), Point::zeros(3));
  EXPECT_THROW(prolong(coarse, Point::zeros(3)), DimensionMismatch);
}

TEST(Prolong, PreservesObjectiveAndSums) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_graph(60 + static_cast<Vertex>(rng() % 60), 0.06, rng());
    SolveParams params;
    params.coarsest_size = 8;
    const Hierarchy h = build_hierarchy(g, params);
    for (std::size_t l = 1; l < h.levels.size(); ++l) {
      const auto& coarse = h.levels[l].instance;
      const auto& fine = h.levels[l - 1].instance;
      Point p = Point::zeros(coarse.dim());
      for (auto& v : p.x) v = u01(rng);
      for (auto& v : p.y) v = u01(rng);
      const Point q = prolong(h.levels[l], p);
      for (double gamma : {0.0, 1.0, coarse.gamma0()}) {
        EXPECT_NEAR(objective(fine, q, gamma), objective(coarse, p, gamma), 1e-9);
      }
      EXPECT_NEAR(weighted_sum(fine.size(), q.x), weighted_sum(coarse.size(), p.x), 1e-9);
      EXPECT_NEAR(weighted_sum(fine.size(), q.y), weighted_sum(coarse.size(), p.y), 1e-9);
    }
  }
}

TEST(Hierarchy, SizesStrictlyDecrease) {
  const Graph g = testing::random_graph(300, 0.02, 4);
  SolveParams params;
  params.coarsest_size = 10;
  const Hierarchy h = build_hierarchy(g, params);
  ASSERT_GT(h.levels.size(), 1u);
  for (std::size_t l = 1; l < h.levels.size(); ++l) {
    EXPECT_LT(h.levels[l].instance.dim(), h.levels[l - 1].instance.dim());
    EXPECT_EQ(h.levels[l].instance.total_size(), 300);
    EXPECT_TRUE(validate(h.levels[l].graph).empty());
  }
}

TEST(Hierarchy, StopsOnStagnation) {
  // A star barely contracts: one pair per round.
  std::vector<Edge> edges;
  for (Vertex v = 1; v < 100; ++v) edges.push_back({0, v, 1});
  const Graph star = Graph::from_edges(100, edges);
  SolveParams params;
  params.coarsest_size = 2;
  EXPECT_EQ(build_hierarchy(star, params).levels.size(), 1u);
}

TEST(Hierarchy, BalanceBounds) {
  SolveParams params;
  EXPECT_EQ(balance_bounds(5, params), (SumBounds{1, 2}));
  EXPECT_EQ(balance_bounds(1000, params), (SumBounds{1, 503}));
  EXPECT_EQ(balance_bounds(10, params), (SumBounds{1, 5}));
  params.ub_fraction = 0.1;
  EXPECT_THROW(balance_bounds(5, params), Infeasible);
}

TEST(SolveCoarsest, PathSingletonSides) {
  const Level level = make_finest_level(path_graph(3), {1, 1}, {1, 1});
  const Point p = solve_coarsest(level, SolveParams{});
  EXPECT_EQ(objective(level.instance, p, level.instance.gamma0()), 2.0);
  const Partition part = extract_partition(level.instance, p);
  EXPECT_EQ(part.separator, std::vector<Vertex>{1});
  // Exhaustive check: no assignment of P3 does better under these bounds.
  EXPECT_EQ(*brute_force_vsp(path_graph(3), {1, 1}, {1, 1}).optimal_weight, 1);
}

TEST(SolveCoarsest, SingleVertexIsInfeasible) {
  const Level level = make_finest_level(testing::edgeless_graph(1), {1, 1}, {1, 1});
  EXPECT_THROW(solve_coarsest(level, SolveParams{}), Infeasible);
}

TEST(SolveCoarsest, EdgelessFillsBothSides) {
  const Level level = make_finest_level(testing::edgeless_graph(4), {1, 2}, {1, 2});
  const Point p = solve_coarsest(level, SolveParams{});
  EXPECT_EQ(objective(level.instance, p, 1.0), 4.0);
  EXPECT_EQ(extract_partition(level.instance, p).separator_weight, 0);
}

TEST(SolveCoarsest, WithoutBruteForceStillFindsOptimumOnSmallCases) {
  SolveParams params;
  params.brute_force_limit = 0;
  const Level level = make_finest_level(path_graph(5), {1, 2}, {1, 2});
  const Point p = solve_coarsest(level, params);
  EXPECT_EQ(extract_partition(level.instance, p).separator, std::vector<Vertex>{2});
}

TEST(Solve, PathOfFive) {
  const SolveResult r = solve(path_graph(5), SolveParams{});
  EXPECT_EQ(r.partition.separator_weight, 1);
  EXPECT_EQ(r.partition.separator, std::vector<Vertex>{2});
  EXPECT_EQ(r.bounds, (SumBounds{1, 2}));
}

TEST(Solve, EdgelessTen) {
  const SolveResult r = solve(testing::edgeless_graph(10), SolveParams{});
  EXPECT_EQ(r.partition.separator_weight, 0);
  EXPECT_EQ(r.partition.a.size(), 5u);
  EXPECT_EQ(r.partition.b.size(), 5u);
}

TEST(Solve, CompleteFourIsInfeasible) {
  EXPECT_THROW(solve(complete_graph(4), SolveParams{}), Infeasible);
}

TEST(Solve, InvalidParamsRejected) {
  SolveParams params;
  params.multistarts = 0;
  EXPECT_THROW(solve(path_graph(5), params), std::invalid_argument);
}

TEST(Solve, MultilevelRunsAreSoundAndDeterministic) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const Vertex n = 150 + static_cast<Vertex>(rng() % 200);
    const Graph g = testing::random_graph(n, 4.0 / n, rng());
    SolveParams params;
    params.coarsest_size = 20;
    params.seed = trial;
    const SolveResult a = solve(g, params);
    const SolveResult b = solve(g, params);
    EXPECT_EQ(a.partition, b.partition);
    EXPECT_GT(a.trace.size(), 1u);
    EXPECT_TRUE(check_partition(g, a.partition, a.bounds, a.bounds).empty());
    for (const LevelTrace& t : a.trace) EXPECT_GE(t.objective_after, t.objective_before - 1e-9);
  }
}

TEST(Solve, GridSeparatorIsAColumn) {
  // 12x12 grid: a straight row or column of 12 vertices is optimal.
  std::vector<Edge> edges;
  auto id = [](Vertex r, Vertex c) { return r * 12 + c; };
  for (Vertex r = 0; r < 12; ++r) {
    for (Vertex c = 0; c < 12; ++c) {
      if (c + 1 < 12) edges.push_back({id(r, c), id(r, c + 1), 1});
      if (r + 1 < 12) edges.push_back({id(r, c), id(r + 1, c), 1});
    }
  }
  const Graph g = Graph::from_edges(144, edges);
  SolveParams params;
  params.coarsest_size = 16;
  const SolveResult r = solve(g, params);
  EXPECT_TRUE(check_partition(g, r.partition, r.bounds, r.bounds).empty());
  EXPECT_LE(r.partition.separator_weight, 14);
}

}  // namespace
}  // namespace vsp
