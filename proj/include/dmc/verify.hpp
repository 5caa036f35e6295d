#pragma once

#include <optional>

#include "dmc/maxflow.hpp"
#include "dmc/network.hpp"

namespace dmc {

enum class VerifyMode { corrected, flawed_reachability };

const char* to_string(VerifyMode mode);

struct Verdict {
  bool is_dmc = false;
  /// W(X).
  Capacity flow_value = 0;
  /// Lowest-indexed arc of U(X) whose test failed. Absent when the verdict
  /// was decided by the W(X) = d clause or when is_dmc holds.
  std::optional<ArcId> failing_arc;
  VerifyMode mode = VerifyMode::corrected;
  /// Residual (or plain) s-t searches performed; at most |U(X)|.
  std::size_t searches = 0;
};

/// Classifies X as a d-MC: W(X) = d and, for every e_i in U(X), the residual
/// graph of a value-d flow under X + 0(e_i) still has an s-t path.
/// Stops at the first failing arc.
Verdict verify(const Network& net, const StateVector& x, Capacity d);

/// Same test given a maximum flow of X already in hand. The max flow is a
/// value-d flow under every X + 0(e_i), so each arc costs one graph search.
Verdict verify(const FlowState& max_flow_of_x, Capacity d);

/// The published criterion without the W(X) = d hypothesis: X passes when
/// every X + 0(e_i), e_i in U(X), has any source-to-sink path through arcs of
/// positive capacity. Kept to reproduce the counterexample; it accepts
/// vectors that are not d-MCs.
Verdict verify_flawed(const Network& net, const StateVector& x, Capacity d);

}  // namespace dmc
