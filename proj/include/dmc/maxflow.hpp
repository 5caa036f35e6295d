#pragma once

#include <stdexcept>
#include <vector>

#include "dmc/network.hpp"

namespace dmc {

/// A caller broke an operation's documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A feasible integer s-t flow under a capacity vector.
///
/// Holds a non-owning pointer to its Network; the network must outlive it.
/// The residual graph is read directly off (capacities, flows): arc k offers
/// capacities[k] - flows[k] forward and flows[k] backward.
class FlowState {
 public:
  FlowState(const Network& net, StateVector capacities);
  FlowState(Network&&, StateVector) = delete;

  [[nodiscard]] const Network& network() const noexcept { return *net_; }
  [[nodiscard]] const StateVector& capacities() const noexcept { return capacities_; }
  [[nodiscard]] const std::vector<Capacity>& flows() const noexcept { return flows_; }
  [[nodiscard]] Capacity flow(ArcId id) const { return flows_.at(id.index()); }
  [[nodiscard]] Capacity value() const noexcept { return value_; }

  /// Same flow, capacity of `id` raised by one. The flow stays feasible, so
  /// its residual is R(V,E,(X + 0(e_id))^v) without recomputing anything.
  [[nodiscard]] FlowState with_bumped_capacity(ArcId id) const;

  /// Conservation at internal nodes, 0 <= f <= x arcwise, value = net source outflow.
  [[nodiscard]] bool is_feasible() const;

 private:
  friend FlowState push_flow(const Network&, const StateVector&, Capacity);

  const Network* net_;
  StateVector capacities_;
  std::vector<Capacity> flows_;
  Capacity value_ = 0;
};

/// Dinic blocking flow, stopping once `limit` units are routed. Adjacency is
/// scanned in ascending arc id, so the returned flow is deterministic.
FlowState push_flow(const Network& net, const StateVector& capacities, Capacity limit);
FlowState push_flow(Network&&, const StateVector&, Capacity) = delete;

/// W(X): a maximum flow under capacities X.
FlowState max_flow(const Network& net, const StateVector& capacities);
FlowState max_flow(Network&&, const StateVector&) = delete;

/// Sink reachable from source in the residual graph of `fs`.
bool residual_reachable(const FlowState& fs);

/// Decides W(X + 0(e_i)) > d by pushing d units under capacities X + 0(e_i)
/// and searching the residual graph. Requires W(X) == d and e_i in U(X);
/// throws ContractError otherwise.
bool check_one_more_unit(const Network& net, const StateVector& x, Capacity d, ArcId i);

}  // namespace dmc
