// Copyright 2026 The MEAF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "meaf/bipartite_network.h"
#include "meaf/error.h"
#include "meaf/flow_network.h"
#include "meaf/max_flow.h"
#include "meaf/min_cost_flow.h"
#include "oracles.h"
#include "test_instances.h"

namespace meaf {
namespace {

using ::meaf::testing::MakeInstance;
using ::testing::HasSubstr;

struct ArcView {
  NodeId tail;
  NodeId head;
  int64_t capacity;
};

std::vector<ArcView> Arcs(const FlowNetwork& net) {
  std::vector<ArcView> out;
  for (ArcIndex a = 0; a < net.num_arcs(); ++a) {
    out.push_back({net.Tail(a), net.Head(a), net.Capacity(a)});
  }
  return out;
}

TEST(BuildNetworkTest, SolidEdgesOnly) {
  Instance inst = MakeInstance({5, 7}, {{2, {0}}});
  BipartiteNetwork net = BuildNetwork(inst, {});
  std::vector<ArcView> arcs = Arcs(net.graph);
  ASSERT_EQ(arcs.size(), 4u);  // s->u, u->a0, a0->t, a1->t
  EXPECT_EQ(arcs[0].capacity, 2);
  EXPECT_EQ(arcs[1].tail, net.UserNode(0));
  EXPECT_EQ(arcs[1].head, net.AppNode(0));
  EXPECT_EQ(arcs[1].capacity, 2);
  EXPECT_EQ(arcs[2].capacity, 5);
  EXPECT_EQ(arcs[3].capacity, 7);
}

TEST(BuildNetworkTest, ActiveEdgeAddsArc) {
  Instance inst = MakeInstance({5, 7}, {{2, {0}}});
  std::vector<Edge> active = {{0, 1}};
  BipartiteNetwork net = BuildNetwork(inst, active);
  ASSERT_EQ(net.pair_edges.size(), 2u);
  EXPECT_EQ(net.pair_edges[1], (Edge{0, 1}));
  EXPECT_EQ(net.graph.Capacity(net.first_pair_arc + 1), 2);
}

TEST(BuildNetworkTest, RejectsSolidOrOutOfRangeActiveEdge) {
  Instance inst = MakeInstance({5, 7}, {{2, {0}}});
  std::vector<Edge> solid = {{0, 0}};
  EXPECT_THROW(BuildNetwork(inst, solid), MeafError);
  std::vector<Edge> bad = {{0, 2}};
  EXPECT_THROW(BuildNetwork(inst, bad), MeafError);
}

TEST(BuildNetworkTest, ReductionInstanceWithoutEdgesHasZeroFlow) {
  Instance inst = MakeInstance({3}, {{1, {}}, {1, {}}, {1, {}}});
  BipartiteNetwork net = BuildNetwork(inst, {});
  EXPECT_TRUE(net.pair_edges.empty());
  EXPECT_EQ(MaxFlow(net.graph).value, 0);
}

TEST(MaxFlowTest, SingleUserExamples) {
  Instance fits = MakeInstance({3}, {{3, {0}}});
  BipartiteNetwork a = BuildNetwork(fits, {});
  EXPECT_EQ(MaxFlow(a.graph).value, 3);
  Instance short_cap = MakeInstance({2}, {{3, {0}}});
  BipartiteNetwork b = BuildNetwork(short_cap, {});
  EXPECT_EQ(MaxFlow(b.graph).value, 2);
}

TEST(MaxFlowTest, SharedAppSaturates) {
  Instance inst = MakeInstance({2, 2}, {{1, {0}}, {2, {0}}, {2, {1}}});
  BipartiteNetwork net = BuildNetwork(inst, {});
  EXPECT_EQ(MaxFlow(net.graph).value, 4);
  EXPECT_EQ(oracle::EnumerateMinCostMaxFlow(net.graph).value, 4);
}

FlowNetwork RandomNetwork(std::mt19937_64& rng, int max_arcs,
                          int64_t max_cap, bool with_costs) {
  std::uniform_int_distribution<int> nodes_dist(2, 6);
  const int n = nodes_dist(rng);
  FlowNetwork net(n, 0, n - 1);
  std::uniform_int_distribution<int> node(0, n - 1);
  std::uniform_int_distribution<int> arcs_dist(1, max_arcs);
  std::uniform_int_distribution<int64_t> cap(0, max_cap);
  std::uniform_int_distribution<int64_t> num(0, 4);
  std::uniform_int_distribution<int64_t> den(1, 5);
  const int arcs = arcs_dist(rng);
  for (int i = 0; i < arcs; ++i) {
    NodeId t = node(rng);
    NodeId h = node(rng);
    if (t == h) h = (h + 1) % n;
    UnitCost c = with_costs ? UnitCost{num(rng), den(rng)} : UnitCost{};
    net.AddArc(t, h, cap(rng), c);
  }
  return net;
}

TEST(MaxFlowTest, MatchesEnumerationAndMinCutOnSmallNetworks) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    FlowNetwork net = RandomNetwork(rng, 10, 2, false);
    const int64_t brute = oracle::EnumerateMinCostMaxFlow(net).value;
    ASSERT_EQ(oracle::MinCutValue(net), brute);
    MaxFlowResult result = MaxFlow(net);
    EXPECT_EQ(result.value, brute) << "trial " << trial;
    std::vector<int64_t> excess = NodeExcess(net, result.arc_flows);
    for (int v = 0; v < net.num_nodes(); ++v) {
      if (v == net.source() || v == net.sink()) continue;
      EXPECT_EQ(excess[v], 0);
    }
    for (ArcIndex a = 0; a < net.num_arcs(); ++a) {
      EXPECT_GE(result.arc_flows[a], 0);
      EXPECT_LE(result.arc_flows[a], net.Capacity(a));
    }
  }
}

TEST(MaxFlowTest, SolverReuseGivesSameValue) {
  std::mt19937_64 rng(12);
  MaxFlowSolver solver;
  for (int trial = 0; trial < 100; ++trial) {
    FlowNetwork net = RandomNetwork(rng, 12, 5, false);
    const int64_t first = solver.Solve(net);
    EXPECT_EQ(solver.Solve(net), first);
    EXPECT_EQ(oracle::MinCutValue(net), first);
  }
}

TEST(FeasibleTest, ReductionExamples) {
  Instance inst = MakeInstance({3}, {{1, {}}, {1, {}}, {1, {}}});
  std::vector<Edge> all = {{0, 0}, {1, 0}, {2, 0}};
  EXPECT_TRUE(Feasible(inst, all));
  std::vector<Edge> two = {{0, 0}, {1, 0}};
  EXPECT_FALSE(Feasible(inst, two));
}

TEST(FeasibleTest, OverloadedInstanceNeverFeasible) {
  Instance inst = MakeInstance({1, 1}, {{2, {}}, {1, {}}});
  EXPECT_FALSE(Feasible(inst, CollectDashedEdges(inst)));
}

TEST(FeasibleTest, AgreesWithHallConditionAndIsMonotone) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = testing::RandomInstance(
        rng, {.max_users = 5, .max_apps = 3, .globally_feasible = false});
    std::vector<Edge> dashed = CollectDashedEdges(inst);
    FeasibilityOracle fast(inst);
    std::vector<Edge> active;
    std::vector<int32_t> chosen;
    int64_t previous = fast.RoutableDemand(chosen);
    std::bernoulli_distribution coin(0.5);
    for (int32_t i = 0; i < static_cast<int32_t>(dashed.size()); ++i) {
      if (!coin(rng)) continue;
      active.push_back(dashed[i]);
      chosen.push_back(i);
      const int64_t routable = fast.RoutableDemand(chosen);
      EXPECT_GE(routable, previous);
      previous = routable;
      const bool hall = oracle::HallFeasible(inst, active);
      EXPECT_EQ(Feasible(inst, active), hall);
      EXPECT_EQ(fast.Check(chosen), hall);
    }
  }
}

TEST(MinCostFlowTest, ZeroCostsGiveMaxFlow) {
  Instance inst = MakeInstance({2, 2}, {{1, {0}}, {2, {0}}, {2, {1}}});
  BipartiteNetwork net = BuildNetwork(inst, {});
  MinCostFlowResult result = MinCostMaxFlow(net.graph);
  EXPECT_EQ(result.value, 4);
  EXPECT_EQ(result.cost, 0);
}

TEST(MinCostFlowTest, SingleUserSplitAcrossTwoApps) {
  Instance inst = MakeInstance({1, 1}, {{2, {}}});
  BipartiteNetwork net = BuildNetwork(inst, CollectDashedEdges(inst),
                                      ArcCosts::kActivationRelaxation);
  MinCostFlowResult result = MinCostMaxFlow(net.graph);
  EXPECT_EQ(result.value, 2);
  EXPECT_EQ(result.cost, 1);
}

TEST(MinCostFlowTest, SolidUserAndFreeUser) {
  Instance inst = MakeInstance({2, 2}, {{1, {0}}, {3, {}}});
  BipartiteNetwork net = BuildNetwork(inst, CollectDashedEdges(inst),
                                      ArcCosts::kActivationRelaxation);
  MinCostFlowResult result = MinCostMaxFlow(net.graph);
  EXPECT_EQ(result.value, 4);
  EXPECT_EQ(result.cost, 1);
  EXPECT_EQ(oracle::EnumerateMinCostMaxFlow(net.graph).cost, 1);
}

TEST(MinCostFlowTest, MatchesEnumerationOnRandomNetworks) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    FlowNetwork net = RandomNetwork(rng, 8, 3, true);
    oracle::FlowOptimum brute = oracle::EnumerateMinCostMaxFlow(net);
    for (CostArithmetic arith :
         {CostArithmetic::kAuto, CostArithmetic::kBigInteger,
          CostArithmetic::kFixedWidth}) {
      MinCostFlowResult result = MinCostMaxFlow(net, arith);
      EXPECT_EQ(result.value, brute.value) << "trial " << trial;
      EXPECT_EQ(result.cost, brute.cost) << "trial " << trial;
      Rational recomputed = 0;
      for (ArcIndex a = 0; a < net.num_arcs(); ++a) {
        recomputed += Rational(net.Cost(a).num, net.Cost(a).den) *
                      result.arc_flows[a];
      }
      EXPECT_EQ(recomputed, result.cost);
    }
  }
}

TEST(MinCostFlowTest, ValueMatchesMaxFlow) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    FlowNetwork net = RandomNetwork(rng, 14, 6, true);
    const int64_t mcf = MinCostMaxFlow(net).value;
    EXPECT_EQ(mcf, MaxFlow(net).value);
  }
}

TEST(MinCostFlowTest, LargeDenominatorsNeedBigIntegers) {
  // lcm of four primes near 1e6 is about 1e24, past the 64-bit fast path.
  const int64_t primes[] = {999983, 999979, 999961, 999959};
  FlowNetwork net(6, 0, 5);
  for (int i = 0; i < 4; ++i) {
    net.AddArc(0, 1 + i, 1, {1, primes[i]});
    net.AddArc(1 + i, 5, 1);
  }
  try {
    MinCostMaxFlow(net, CostArithmetic::kFixedWidth);
    FAIL() << "expected overflow";
  } catch (const MeafError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCostOverflow);
    EXPECT_THAT(e.what(), HasSubstr("big-integer"));
  }
  MinCostFlowResult result = MinCostMaxFlow(net, CostArithmetic::kAuto);
  EXPECT_TRUE(result.used_big_integers);
  Rational expected = 0;
  for (int64_t p : primes) expected += Rational(1, p);
  EXPECT_EQ(result.value, 4);
  EXPECT_EQ(result.cost, expected);
}

TEST(FlowNetworkTest, RejectsBadArcs) {
  FlowNetwork net(3, 0, 2);
  EXPECT_THROW(net.AddArc(0, 3, 1), MeafError);
  EXPECT_THROW(net.AddArc(0, 1, -1), MeafError);
  EXPECT_THROW(net.AddArc(0, 1, 1, {1, 0}), MeafError);
}

TEST(FlowNetworkTest, DotDumpNamesNodes) {
  Instance inst = MakeInstance({3}, {{2, {0}}});
  BipartiteNetwork net = BuildNetwork(inst, {});
  MaxFlow(net.graph);
  const std::string dot = net.graph.ToDot(net.NodeNames(inst));
  EXPECT_THAT(dot, HasSubstr("digraph"));
  EXPECT_THAT(dot, HasSubstr("u1"));
  EXPECT_THAT(dot, HasSubstr("2/2"));
}

TEST(ExtractAllocationTest, ActivatedAreFlowCarryingDashedEdges) {
  Instance inst = MakeInstance({1, 5}, {{3, {0}}});
  BipartiteNetwork net = BuildNetwork(inst, CollectDashedEdges(inst));
  MaxFlowResult flow = MaxFlow(net.graph);
  Allocation alloc = ExtractAllocation(inst, net, flow.arc_flows);
  EXPECT_EQ(alloc.activated, (std::vector<Edge>{{0, 1}}));
  EXPECT_TRUE(VerifyAllocation(inst, alloc).ok);
}

}  // namespace
}  // namespace meaf
