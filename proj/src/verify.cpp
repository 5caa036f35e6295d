#include "dmc/verify.hpp"

namespace dmc {

const char* to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::corrected:
      return "corrected";
    case VerifyMode::flawed_reachability:
      return "flawed-reachability";
  }
  return "unknown";
}

Verdict verify(const Network& net, const StateVector& x, Capacity d) { return verify(max_flow(net, x), d); }

Verdict verify(const FlowState& max_flow_of_x, Capacity d) {
  const Network& net = max_flow_of_x.network();
  const StateVector& x = max_flow_of_x.capacities();
  Verdict v;
  v.mode = VerifyMode::corrected;
  v.flow_value = max_flow_of_x.value();
  if (v.flow_value != d) return v;

  for (ArcId i : unsaturated_set(net, x)) {
    ++v.searches;
    if (!residual_reachable(max_flow_of_x.with_bumped_capacity(i))) {
      v.failing_arc = i;
      return v;
    }
  }
  v.is_dmc = true;
  return v;
}

Verdict verify_flawed(const Network& net, const StateVector& x, Capacity d) {
  (void)d;  // the published test never looks at d; that is the flaw
  Verdict v;
  v.mode = VerifyMode::flawed_reachability;
  v.flow_value = max_flow(net, x).value();
  for (ArcId i : unsaturated_set(net, x)) {
    ++v.searches;
    // Zero flow: the residual graph is just the arcs with positive capacity.
    const FlowState empty(net, bump(net, x, i).state);
    if (!residual_reachable(empty)) {
      v.failing_arc = i;
      return v;
    }
  }
  v.is_dmc = true;
  return v;
}

}  // namespace dmc
