#pragma once

#include <cstdint>
#include <vector>

#include "dmc/network.hpp"

namespace dmc {

struct SolveCounters {
  std::uint64_t maxflow_calls = 0;
  std::uint64_t candidates_total = 0;
  /// Candidates streamed from each cut, in cut order.
  std::vector<std::uint64_t> candidates_per_cut;
  std::uint64_t residual_searches = 0;
  /// Candidates that passed verification (before cross-cut deduplication).
  std::uint64_t verified_candidates = 0;
  std::uint64_t duplicates_removed = 0;

  friend bool operator==(const SolveCounters&, const SolveCounters&) = default;
};

struct SolveParameters {
  Capacity d = 0;
  std::uint64_t p = 0;  ///< number of minimal cuts
  std::uint64_t m = 0;  ///< number of arcs
  std::uint64_t sigma_max = 0;
  std::uint64_t sigma_sum = 0;

  friend bool operator==(const SolveParameters&, const SolveParameters&) = default;
};

struct SolveReport {
  /// Strictly increasing, lexicographic.
  std::vector<StateVector> dmcs;
  SolveCounters counters;
  SolveParameters parameters;
  /// d exceeds W(W) (the smallest cut capacity), so no d-MC can exist.
  bool demand_exceeds_capacity = false;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

struct SolveOptions {
  /// Worker threads over cuts; the report does not depend on this value.
  unsigned threads = 1;
};

/// Enumerates all d-MCs from the complete minimal cut list:
/// every candidate of every cut gets its own max flow, candidates with
/// W(X) != d are dropped, the rest go through verify(), and the union over
/// cuts is deduplicated. Throws std::invalid_argument when `cuts` is empty or
/// d < 0.
SolveReport find_all_dmcs(const Network& net, Capacity d, const std::vector<MinCut>& cuts,
                          const SolveOptions& options = {});

/// Checks the operation counts behind the O((m^2 + n^2 sqrt(m)) p sigma) bound:
/// maxflow_calls <= candidates_total <= sigma_sum <= p * sigma_max and
/// residual_searches <= m * candidates_total.
bool audit_complexity(const SolveReport& report);

}  // namespace dmc
