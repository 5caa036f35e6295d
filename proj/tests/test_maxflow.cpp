#include <gtest/gtest.h>

#include <random>

#include "dmc/maxflow.hpp"
#include "support/cut_oracle.hpp"
#include "support/random_networks.hpp"

using namespace dmc;
using dmc::testing::fig1;
using dmc::testing::min_cut_by_enumeration;
using dmc::testing::sv;

// Reference values from min_cut_by_enumeration. W(W) is 8: the cut
// {e2,e3,e5} carries 2 + 3 + 3.
TEST(MaxFlow, Fig1Values) {
  const Network net = fig1();
  EXPECT_EQ(min_cut_by_enumeration(net, saturated_vector(net)), 8);
  EXPECT_EQ(max_flow(net, saturated_vector(net)).value(), 8);
  EXPECT_EQ(max_flow(net, sv({0, 2, 3, 1, 3, 3})).value(), 5);
  EXPECT_EQ(max_flow(net, sv({1, 2, 3, 1, 3, 3})).value(), 6);
  EXPECT_EQ(max_flow(net, zero_vector(net)).value(), 0);
}

TEST(MaxFlow, ReturnsFeasibleFlow) {
  const Network net = fig1();
  const FlowState fs = max_flow(net, sv({1, 2, 3, 1, 3, 3}));
  EXPECT_TRUE(fs.is_feasible());
  EXPECT_EQ(fs.capacities(), sv({1, 2, 3, 1, 3, 3}));
}

TEST(MaxFlow, PushFlowStopsAtLimit) {
  const Network net = fig1();
  const FlowState fs = push_flow(net, saturated_vector(net), 5);
  EXPECT_EQ(fs.value(), 5);
  EXPECT_TRUE(fs.is_feasible());
  EXPECT_TRUE(residual_reachable(fs));
  EXPECT_EQ(push_flow(net, saturated_vector(net), 0).value(), 0);
  EXPECT_EQ(push_flow(net, saturated_vector(net), 100).value(), 8);
}

TEST(MaxFlow, AntiParallelAndParallelArcs) {
  const Network net = Network::make(3, 1, 3,
                                    {{ArcId{1}, 1, 2, 2}, {ArcId{2}, 2, 1, 5}, {ArcId{3}, 2, 3, 1},
                                     {ArcId{4}, 2, 3, 4}, {ArcId{5}, 1, 3, 1}});
  EXPECT_EQ(max_flow(net, saturated_vector(net)).value(), 3);
  EXPECT_EQ(min_cut_by_enumeration(net, saturated_vector(net)), 3);
}

TEST(MaxFlow, Deterministic) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Network net = dmc::testing::random_network(rng);
    const StateVector x = dmc::testing::random_state(rng, net);
    EXPECT_EQ(max_flow(net, x).flows(), max_flow(net, x).flows());
  }
}

TEST(MaxFlow, EqualsMinCutOnRandomNetworks) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const Network net = dmc::testing::random_network(rng, {2, 7, 12, 5});
    const StateVector x = dmc::testing::random_state(rng, net);
    const FlowState fs = max_flow(net, x);
    ASSERT_EQ(fs.value(), min_cut_by_enumeration(net, x)) << serialize_network(net) << to_string(x);
    ASSERT_TRUE(fs.is_feasible());
    ASSERT_FALSE(residual_reachable(fs));
  }
}

TEST(Residual, Fig1BumpedCandidateHasNoAugmentingPath) {
  const Network net = fig1();
  const FlowState fs = max_flow(net, sv({1, 2, 3, 1, 3, 3}));
  ASSERT_EQ(fs.value(), 6);
  EXPECT_FALSE(residual_reachable(fs));
}

TEST(Residual, SubmaximalFlowIsAugmentable) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const Network net = dmc::testing::random_network(rng);
    const StateVector x = dmc::testing::random_state(rng, net);
    const Capacity w = max_flow(net, x).value();
    for (Capacity v = 0; v < w; ++v) ASSERT_TRUE(residual_reachable(push_flow(net, x, v)));
  }
}

TEST(Residual, SingleArcZeroFlow) {
  const Network net = Network::make(2, 1, 2, {{ArcId{1}, 1, 2, 1}});
  EXPECT_TRUE(residual_reachable(FlowState(net, sv({1}))));
  EXPECT_FALSE(residual_reachable(FlowState(net, sv({0}))));
}

TEST(CheckOneMoreUnit, Fig1) {
  const Network net = fig1();
  const StateVector c31 = sv({0, 2, 3, 1, 3, 3});
  // W(C31) = 5, so d = 7 breaks the W(X) = d hypothesis.
  EXPECT_THROW(check_one_more_unit(net, c31, 7, ArcId{1}), ContractError);
  EXPECT_TRUE(check_one_more_unit(net, c31, 5, ArcId{1}));
  EXPECT_THROW(check_one_more_unit(net, c31, 5, ArcId{2}), ContractError);  // e2 saturated
}

TEST(CheckOneMoreUnit, MatchesDirectInequality) {
  std::mt19937_64 rng(13);
  int negatives = 0;
  int positives = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Network net = dmc::testing::random_network(rng);
    const StateVector x = dmc::testing::random_state(rng, net);
    const Capacity d = min_cut_by_enumeration(net, x);
    for (ArcId i : unsaturated_set(net, x)) {
      const bool expected = min_cut_by_enumeration(net, bump(net, x, i).state) > d;
      ASSERT_EQ(check_one_more_unit(net, x, d, i), expected);
      (expected ? positives : negatives)++;
    }
  }
  EXPECT_GT(negatives, 0);
  EXPECT_GT(positives, 0);
}

TEST(MaxFlow, UnitStepMonotone) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5000; ++trial) {
    const Network net = dmc::testing::random_network(rng);
    const StateVector x = dmc::testing::random_state(rng, net);
    const Capacity w = max_flow(net, x).value();
    for (std::size_t k = 0; k < net.arc_count(); ++k) {
      const Capacity raised = max_flow(net, bump(net, x, ArcId::from_index(k)).state).value();
      ASSERT_LE(w, raised);
      ASSERT_LE(raised, w + 1);
    }
  }
}
