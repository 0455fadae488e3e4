#include <gtest/gtest.h>

#include <random>

#include "test_graphs.hpp"
#include "vsp/cbp.hpp"
#include "vsp/errors.hpp"
#include "vsp/partition.hpp"

namespace vsp {
namespace {

using testing::complete_graph;
using testing::path_graph;
using testing::unit;

TEST(Round, BinaryOrthogonalPointUnchanged) {
  const auto inst = CbpInstance::from_graph(path_graph(3), {1, 1}, {1, 1});
  const Point p{unit(3, 0), unit(3, 2)};
  EXPECT_EQ(round_to_binary(inst, p), p);
}

TEST(Round, IsolatedPairTieRaisesLowerIndex) {
  const auto inst = CbpInstance::from_graph(testing::edgeless_graph(2), {1, 1}, {0, 2});
  const Point p{{0.5, 0.5}, {0, 0}};
  // Either rounding evaluates to 1.
  EXPECT_EQ(objective(inst, Point{{1, 0}, {0, 0}}, 1.0), 1.0);
  EXPECT_EQ(objective(inst, Point{{0, 1}, {0, 0}}, 1.0), 1.0);
  const Point q = round_to_binary(inst, p);
  EXPECT_EQ(q.x, (std::vector<double>{1, 0}));
  EXPECT_EQ(q.y, (std::vector<double>{0, 0}));
  EXPECT_EQ(objective(inst, q, inst.gamma0()), 1.0);
}

TEST(Round, OverlapDropsTheSideAboveItsLowerBound) {
  const auto inst = CbpInstance::from_graph(complete_graph(2), {1, 2}, {0, 2});
  const Point p{unit(2, 0), unit(2, 0)};
  EXPECT_EQ(objective(inst, p, 1.0), 1.0);
  const Point q = round_to_binary(inst, p);
  EXPECT_EQ(q.x, unit(2, 0));
  EXPECT_EQ(q.y, (std::vector<double>{0, 0}));
  EXPECT_EQ(objective(inst, q, 1.0), 1.0);
  EXPECT_EQ(inst.interaction().bilinear(q.x, q.y), 0.0);
}

TEST(Round, OverlapWithBothSidesAtLowerBoundIsDegenerate) {
  const auto inst = CbpInstance::from_graph(complete_graph(2), {1, 1}, {1, 1});
  EXPECT_THROW(round_to_binary(inst, Point{unit(2, 0), unit(2, 0)}), DegenerateRepair);
}

TEST(Round, InfeasibleInputRejected) {
  const auto inst = CbpInstance::from_graph(path_graph(3), {1, 1}, {1, 1});
  EXPECT_THROW(round_to_binary(inst, Point::zeros(3)), InfeasiblePoint);
}

TEST(Round, TieOnCostZeroesY) {
  // x_0 = 1 and y_1 = 1 across an edge, both sides have slack: equal cost
  // means the y endpoint is dropped.
  const auto inst = CbpInstance::from_graph(path_graph(4), {0, 2}, {0, 2});
  const Point q = round_to_binary(inst, Point{unit(4, 0), unit(4, 1)});
  EXPECT_EQ(q.x, unit(4, 0));
  EXPECT_EQ(q.y, (std::vector<double>{0, 0, 0, 0}));
}

TEST(Round, CheaperEndpointIsDropped) {
  const Graph g = Graph::from_edges(2, std::vector<Edge>{{0, 1, 1}}, DuplicateEdges::kCollapse,
                                    {1, 3}, {});
  const auto inst = CbpInstance::from_graph(g, {0, 2}, {0, 2});
  const Point q = round_to_binary(inst, Point{unit(2, 0), unit(2, 1)});
  EXPECT_EQ(q.x, (std::vector<double>{0, 0}));
  EXPECT_EQ(q.y, unit(2, 1));
}

TEST(Round, NonUnitSizesPairing) {
  // Sizes (2, 1, 1); x = (0.5, 1, 0) sits on s^T x = 2 = ua with one
  // fractional coordinate of size 2.
  const Graph g = Graph::from_edges(3, std::vector<Edge>{}, DuplicateEdges::kCollapse, {},
                                    {2, 1, 1});
  const auto inst = CbpInstance::from_graph(g, {2, 2}, {0, 4});
  const Point p{{0.5, 1, 0}, {0, 0, 0}};
  ASSERT_TRUE(feasible(inst, p));
  const Point q = round_to_binary(inst, p);
  EXPECT_TRUE(is_binary(q));
  EXPECT_TRUE(feasible(inst, q));
  EXPECT_GE(objective(inst, q, inst.gamma0()), objective(inst, p, inst.gamma0()) - 1e-9);
}

TEST(Round, RandomFractionalPointsMeetContract) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  int rounded = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = 4 + static_cast<Vertex>(rng() % 30);
    const Graph g = testing::random_graph(n, 0.15, rng());
    const SumBounds b{1, static_cast<Weight>(0.503 * n)};
    const auto inst = CbpInstance::from_graph(g, b, b);
    Point p = Point::zeros(n);
    for (auto& v : p.x) v = u01(rng) * 0.4;
    for (auto& v : p.y) v = u01(rng) * 0.4;
    if (!feasible(inst, p)) continue;
    Point q;
    try {
      q = round_to_binary(inst, p);
    } catch (const DegenerateRepair&) {
      continue;
    }
    ++rounded;
    EXPECT_TRUE(is_binary(q));
    EXPECT_TRUE(feasible(inst, q));
    EXPECT_EQ(inst.interaction().bilinear(q.x, q.y), 0.0);
    EXPECT_GE(objective(inst, q, inst.gamma0()), objective(inst, p, inst.gamma0()) - 1e-9);
  }
  EXPECT_GT(rounded, 50);
}

TEST(Extract, PathSeparator) {
  const Graph g = path_graph(3);
  const auto inst = CbpInstance::from_graph(g, {1, 1}, {1, 1});
  const Partition p = extract_partition(inst, Point{unit(3, 0), unit(3, 2)});
  EXPECT_EQ(p.a, std::vector<Vertex>{0});
  EXPECT_EQ(p.b, std::vector<Vertex>{2});
  EXPECT_EQ(p.separator, std::vector<Vertex>{1});
  EXPECT_EQ(p.separator_weight, 1);
  EXPECT_TRUE(check_partition(g, p, {1, 1}, {1, 1}).empty());
}

TEST(Extract, AllInA) {
  const Graph g = path_graph(4);
  const auto inst = CbpInstance::from_graph(g, {0, 4}, {0, 4});
  const Partition p = extract_partition(inst, Point{{1, 1, 1, 1}, {0, 0, 0, 0}});
  EXPECT_EQ(p.a.size(), 4u);
  EXPECT_TRUE(p.b.empty());
  EXPECT_TRUE(p.separator.empty());
  EXPECT_EQ(p.separator_weight, 0);
}

TEST(Extract, Errors) {
  const auto inst = CbpInstance::from_graph(complete_graph(2), {0, 2}, {0, 2});
  EXPECT_THROW(extract_partition(inst, Point{unit(2, 0), unit(2, 0)}), NotOrthogonal);
  EXPECT_THROW(extract_partition(inst, Point{unit(2, 0), unit(2, 1)}), NotOrthogonal);
  EXPECT_THROW(extract_partition(inst, Point{{0.5, 0}, {0, 0}}), NotBinary);
  const auto tight = CbpInstance::from_graph(complete_graph(2), {1, 2}, {1, 2});
  EXPECT_THROW(extract_partition(tight, Point{unit(2, 0), {0, 0}}), InfeasiblePoint);
}

TEST(CheckPartition, DetectsBreaches) {
  const Graph g = path_graph(3);
  EXPECT_FALSE(check_partition(g, Partition{{0}, {1}, {2}, 1}, {1, 1}, {1, 1}).empty());
  EXPECT_FALSE(check_partition(g, Partition{{0}, {2}, {}, 0}, {1, 1}, {1, 1}).empty());
  EXPECT_FALSE(check_partition(g, Partition{{0}, {2}, {1}, 0}, {1, 1}, {1, 1}).empty());
  EXPECT_FALSE(check_partition(g, Partition{{0, 1}, {}, {2}, 1}, {1, 1}, {0, 1}).empty());
}

}  // namespace
}  // namespace vsp
