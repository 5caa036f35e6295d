#include <gtest/gtest.h>

#include <random>

#include "dmc/candidates.hpp"
#include "dmc/cuts.hpp"
#include "dmc/oracle.hpp"
#include "dmc/verify.hpp"
#include "support/random_networks.hpp"

using namespace dmc;
using dmc::testing::fig1;
using dmc::testing::sv;

TEST(Verify, Fig1CounterexampleRejected) {
  const Verdict v = verify(fig1(), sv({0, 2, 3, 1, 3, 3}), 7);
  EXPECT_FALSE(v.is_dmc);
  EXPECT_EQ(v.flow_value, 5);
  EXPECT_FALSE(v.failing_arc.has_value());
  EXPECT_EQ(v.mode, VerifyMode::corrected);
}

TEST(Verify, Fig1SaturatedVector) {
  const Network net = fig1();
  // W(W) = 8, U(W) is empty: a d-MC exactly at d = 8, vacuously.
  const Verdict at8 = verify(net, saturated_vector(net), 8);
  EXPECT_TRUE(at8.is_dmc);
  EXPECT_EQ(at8.searches, 0u);
  const Verdict at7 = verify(net, saturated_vector(net), 7);
  EXPECT_FALSE(at7.is_dmc);
  EXPECT_EQ(at7.flow_value, 8);
}

TEST(Verify, SingleArc) {
  const Network net = Network::make(2, 1, 2, {{ArcId{1}, 1, 2, 3}});
  EXPECT_TRUE(verify(net, sv({2}), 2).is_dmc);
  EXPECT_FALSE(verify(net, sv({2}), 1).is_dmc);
}

TEST(Verify, ReportsLowestFailingArc) {
  // d = 0 on Fig 1: (0,0,0,0,0,0) has W = 0 but raising e2 alone (1->3) still
  // gives W = 0 because e4 and e6 are at 0.
  const Verdict v = verify(fig1(), sv({0, 0, 0, 0, 0, 0}), 0);
  EXPECT_FALSE(v.is_dmc);
  ASSERT_TRUE(v.failing_arc.has_value());
  EXPECT_EQ(*v.failing_arc, ArcId{1});
  EXPECT_EQ(v.searches, 1u);
}

TEST(VerifyFlawed, Fig1CounterexampleAccepted) {
  const Verdict v = verify_flawed(fig1(), sv({0, 2, 3, 1, 3, 3}), 7);
  EXPECT_TRUE(v.is_dmc);
  EXPECT_EQ(v.mode, VerifyMode::flawed_reachability);
  EXPECT_EQ(v.flow_value, 5);
}

TEST(VerifyFlawed, VacuousAgreementOnSaturatedVector) {
  const Network net = fig1();
  EXPECT_EQ(verify(net, saturated_vector(net), 8).is_dmc, verify_flawed(net, saturated_vector(net), 8).is_dmc);
}

TEST(VerifyFlawed, DisagreesSomewhereOnFig1AtSeven) {
  const Network net = fig1();
  int disagreements = 0;
  const auto cuts = enumerate_min_cuts(net);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (const Candidate& c : enumerate_candidates(net, cuts[i], 7, i + 1)) {
      if (verify(net, c.vector, 7).is_dmc != verify_flawed(net, c.vector, 7).is_dmc) ++disagreements;
    }
  }
  EXPECT_GT(disagreements, 0);
}

// Over small random networks: the corrected verdict equals the definition
// (via the oracle's own max flow), and the flawed test only errs by accepting.
TEST(Verify, MatchesDefinitionAndFlawIsOneSided) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const Network net = dmc::testing::random_network(rng, {2, 5, 7, 3});
    const oracle::FlowTable table(net);
    const Capacity top = table.at(saturated_vector(net));
    for (Capacity d = 0; d <= top + 1; ++d) {
      const auto truth = oracle::brute_force_dmcs(table, d);
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        const StateVector x = table.state_at(idx);
        const bool expected = std::binary_search(truth.begin(), truth.end(), x);
        const Verdict corrected = verify(net, x, d);
        ASSERT_EQ(corrected.is_dmc, expected) << serialize_network(net) << to_string(x) << " d=" << d;
        if (corrected.is_dmc) {
          ASSERT_FALSE(corrected.failing_arc.has_value());
          ASSERT_TRUE(verify_flawed(net, x, d).is_dmc);
        }
        if (corrected.flow_value != d) ASSERT_FALSE(corrected.is_dmc);
      }
    }
  }
}
