#include <gtest/gtest.h>

#include <random>

#include "dmc/candidates.hpp"
#include "dmc/cuts.hpp"
#include "dmc/oracle.hpp"
#include "dmc/solver.hpp"
#include "dmc/verify.hpp"
#include "support/random_networks.hpp"

using namespace dmc;
using dmc::testing::fig1;
using dmc::testing::sv;

TEST(FindAllDmcs, Fig1AtSevenExcludesCounterexample) {
  const Network net = fig1();
  const SolveReport r = find_all_dmcs(net, 7, enumerate_min_cuts(net));
  EXPECT_FALSE(std::binary_search(r.dmcs.begin(), r.dmcs.end(), sv({0, 2, 3, 1, 3, 3})));
  // Frozen from the brute-force oracle.
  const std::vector<StateVector> expected{sv({2, 2, 3, 1, 3, 3}), sv({4, 1, 3, 1, 3, 3}), sv({4, 2, 2, 1, 3, 3}),
                                          sv({4, 2, 3, 1, 2, 3}), sv({4, 2, 3, 1, 3, 1})};
  EXPECT_EQ(r.dmcs, expected);
  EXPECT_EQ(r.dmcs, oracle::brute_force_dmcs(net, 7));
  EXPECT_TRUE(audit_complexity(r));
  EXPECT_FALSE(r.demand_exceeds_capacity);
}

TEST(FindAllDmcs, Fig1AtZero) {
  const Network net = fig1();
  const SolveReport r = find_all_dmcs(net, 0, enumerate_min_cuts(net));
  const std::vector<StateVector> expected{sv({0, 0, 0, 1, 3, 3}), sv({0, 2, 0, 0, 3, 0}), sv({4, 0, 0, 1, 0, 3}),
                                          sv({4, 2, 0, 1, 0, 0})};
  EXPECT_EQ(r.dmcs, expected);
  EXPECT_FALSE(std::binary_search(r.dmcs.begin(), r.dmcs.end(), zero_vector(net)));
}

TEST(FindAllDmcs, Fig1AboveCapacity) {
  const Network net = fig1();
  const auto cuts = enumerate_min_cuts(net);
  const SolveReport at8 = find_all_dmcs(net, 8, cuts);
  EXPECT_EQ(at8.dmcs, std::vector<StateVector>{saturated_vector(net)});
  EXPECT_FALSE(at8.demand_exceeds_capacity);
  const SolveReport at9 = find_all_dmcs(net, 9, cuts);
  EXPECT_TRUE(at9.dmcs.empty());
  EXPECT_TRUE(at9.demand_exceeds_capacity);
}

TEST(FindAllDmcs, Fig1SizesPerDemand) {
  const Network net = fig1();
  const auto cuts = enumerate_min_cuts(net);
  const std::size_t sizes[] = {4, 13, 24, 32, 32, 24, 13, 5, 1, 0};
  for (Capacity d = 0; d <= 9; ++d) {
    EXPECT_EQ(find_all_dmcs(net, d, cuts).dmcs.size(), sizes[d]) << "d=" << d;
  }
}

TEST(FindAllDmcs, Preconditions) {
  const Network net = fig1();
  EXPECT_THROW(find_all_dmcs(net, 3, {}), std::invalid_argument);
  EXPECT_THROW(find_all_dmcs(net, -1, enumerate_min_cuts(net)), std::invalid_argument);
}

TEST(FindAllDmcs, CounterInvariants) {
  const Network net = fig1();
  const auto cuts = enumerate_min_cuts(net);
  for (Capacity d = 0; d <= 9; ++d) {
    const SolveReport r = find_all_dmcs(net, d, cuts);
    const auto& c = r.counters;
    EXPECT_EQ(r.parameters.p, cuts.size());
    EXPECT_EQ(r.parameters.m, 6u);
    std::uint64_t sigma_sum = 0;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      const std::uint64_t sigma = count_candidates(net, cuts[i], d);
      EXPECT_EQ(c.candidates_per_cut[i], sigma);
      sigma_sum += sigma;
    }
    EXPECT_EQ(r.parameters.sigma_sum, sigma_sum);
    EXPECT_EQ(c.maxflow_calls, c.candidates_total);
    EXPECT_EQ(r.dmcs.size() + c.duplicates_removed, c.verified_candidates);
    EXPECT_TRUE(std::is_sorted(r.dmcs.begin(), r.dmcs.end()));
    EXPECT_EQ(std::adjacent_find(r.dmcs.begin(), r.dmcs.end()), r.dmcs.end());
    for (const StateVector& x : r.dmcs) EXPECT_TRUE(verify(net, x, d).is_dmc);
    EXPECT_TRUE(audit_complexity(r));
  }
}

TEST(FindAllDmcs, DeterministicAcrossThreadCounts) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const Network net = dmc::testing::random_network(rng, {3, 7, 10, 3});
    const auto cuts = enumerate_min_cuts(net);
    const Capacity d = std::uniform_int_distribution<Capacity>(0, 4)(rng);
    const SolveReport one = find_all_dmcs(net, d, cuts, {1});
    EXPECT_EQ(one, find_all_dmcs(net, d, cuts, {1}));
    EXPECT_EQ(one, find_all_dmcs(net, d, cuts, {4}));
  }
}

TEST(FindAllDmcs, SingleArcNetwork) {
  const Network net = Network::make(2, 1, 2, {{ArcId{1}, 1, 2, 3}});
  const auto cuts = enumerate_min_cuts(net);
  for (Capacity d = 0; d <= 4; ++d) {
    const SolveReport r = find_all_dmcs(net, d, cuts);
    EXPECT_EQ(r.dmcs, oracle::brute_force_dmcs(net, d));
    EXPECT_LE(r.counters.maxflow_calls, r.counters.candidates_total);
    EXPECT_TRUE(audit_complexity(r));
  }
}

TEST(AuditComplexity, DetectsViolations) {
  const Network net = fig1();
  SolveReport r = find_all_dmcs(net, 7, enumerate_min_cuts(net));
  ASSERT_TRUE(audit_complexity(r));
  SolveReport too_many_flows = r;
  too_many_flows.counters.maxflow_calls = r.parameters.sigma_sum + 1;
  EXPECT_FALSE(audit_complexity(too_many_flows));
  SolveReport too_many_searches = r;
  too_many_searches.counters.residual_searches = r.parameters.m * r.counters.candidates_total + 1;
  EXPECT_FALSE(audit_complexity(too_many_searches));
}

TEST(FindAllDmcs, OracleEquivalenceOnRandomNetworks) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const Network net = dmc::testing::random_network(rng);
    const auto cuts = enumerate_min_cuts(net);
    const oracle::FlowTable table(net);
    const Capacity top = table.at(saturated_vector(net));
    for (Capacity d = 0; d <= top + 1; ++d) {
      const SolveReport r = find_all_dmcs(net, d, cuts);
      ASSERT_EQ(r.dmcs, oracle::brute_force_dmcs(table, d)) << serialize_network(net) << "d=" << d;
      ASSERT_TRUE(audit_complexity(r));
      ASSERT_EQ(r.demand_exceeds_capacity, d > top);
    }
  }
}
