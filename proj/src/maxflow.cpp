#include "dmc/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace dmc {

namespace {

// One residual move: traverse arc `arc` forward (tail->head) or backward.
struct Step {
  std::size_t arc;
  bool forward;
};

// Per-node incidence lists in ascending arc id; each arc appears once at its
// tail (forward) and once at its head (backward).
std::vector<std::vector<Step>> incidence(const Network& net) {
  std::vector<std::vector<Step>> adj(static_cast<std::size_t>(net.node_count()) + 1);
  for (std::size_t k = 0; k < net.arc_count(); ++k) {
    const Arc& a = net.arcs()[k];
    adj[static_cast<std::size_t>(a.tail)].push_back({k, true});
    adj[static_cast<std::size_t>(a.head)].push_back({k, false});
  }
  return adj;
}

class Dinic {
 public:
  Dinic(const Network& net, const std::vector<Capacity>& caps, std::vector<Capacity>& flows)
      : net_(net), caps_(caps), flows_(flows), adj_(incidence(net)), level_(adj_.size()), next_(adj_.size()) {}

  Capacity run(Capacity limit) {
    Capacity total = 0;
    while (total < limit && build_levels()) {
      std::fill(next_.begin(), next_.end(), 0);
      while (total < limit) {
        const Capacity pushed = augment(net_.source(), limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

 private:
  [[nodiscard]] Capacity residual(const Step& s) const {
    return s.forward ? caps_[s.arc] - flows_[s.arc] : flows_[s.arc];
  }
  [[nodiscard]] NodeId other_end(const Step& s) const {
    const Arc& a = net_.arcs()[s.arc];
    return s.forward ? a.head : a.tail;
  }

  bool build_levels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<NodeId> frontier;
    level_[static_cast<std::size_t>(net_.source())] = 0;
    frontier.push(net_.source());
    while (!frontier.empty()) {
      const NodeId v = frontier.front();
      frontier.pop();
      for (const Step& s : adj_[static_cast<std::size_t>(v)]) {
        const NodeId w = other_end(s);
        if (residual(s) > 0 && level_[static_cast<std::size_t>(w)] < 0) {
          level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(v)] + 1;
          frontier.push(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(net_.sink())] >= 0;
  }

  Capacity augment(NodeId v, Capacity want) {
    if (v == net_.sink()) return want;
    const auto vi = static_cast<std::size_t>(v);
    for (std::size_t& k = next_[vi]; k < adj_[vi].size(); ++k) {
      const Step& s = adj_[vi][k];
      const NodeId w = other_end(s);
      const Capacity room = residual(s);
      if (room <= 0 || level_[static_cast<std::size_t>(w)] != level_[vi] + 1) continue;
      const Capacity got = augment(w, std::min(want, room));
      if (got > 0) {
        flows_[s.arc] += s.forward ? got : -got;
        return got;
      }
    }
    return 0;
  }

  const Network& net_;
  const std::vector<Capacity>& caps_;
  std::vector<Capacity>& flows_;
  std::vector<std::vector<Step>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace

FlowState::FlowState(const Network& net, StateVector capacities)
    : net_(&net), capacities_(std::move(capacities)), flows_(net.arc_count(), 0) {
  if (capacities_.size() != net.arc_count()) {
    throw ContractError("capacity vector has " + std::to_string(capacities_.size()) + " entries, network has " +
                        std::to_string(net.arc_count()) + " arcs");
  }
}

FlowState FlowState::with_bumped_capacity(ArcId id) const {
  FlowState out = *this;
  ++out.capacities_[id];
  return out;
}

bool FlowState::is_feasible() const {
  std::vector<Capacity> excess(static_cast<std::size_t>(net_->node_count()) + 1, 0);
  for (std::size_t k = 0; k < flows_.size(); ++k) {
    const Capacity f = flows_[k];
    if (f < 0 || f > capacities_.values[k]) return false;
    const Arc& a = net_->arcs()[k];
    excess[static_cast<std::size_t>(a.tail)] -= f;
    excess[static_cast<std::size_t>(a.head)] += f;
  }
  for (NodeId v = 1; v <= net_->node_count(); ++v) {
    if (v == net_->source() || v == net_->sink()) continue;
    if (excess[static_cast<std::size_t>(v)] != 0) return false;
  }
  return -excess[static_cast<std::size_t>(net_->source())] == value_ && value_ >= 0;
}

FlowState push_flow(const Network& net, const StateVector& capacities, Capacity limit) {
  FlowState fs(net, capacities);
  if (limit > 0) {
    Dinic dinic(net, fs.capacities_.values, fs.flows_);
    fs.value_ = dinic.run(limit);
  }
  return fs;
}

FlowState max_flow(const Network& net, const StateVector& capacities) {
  return push_flow(net, capacities, std::numeric_limits<Capacity>::max());
}

bool residual_reachable(const FlowState& fs) {
  const Network& net = fs.network();
  const auto& caps = fs.capacities().values;
  const auto& flows = fs.flows();
  const auto adj = incidence(net);

  std::vector<char> seen(adj.size(), 0);
  std::vector<NodeId> stack{net.source()};
  seen[static_cast<std::size_t>(net.source())] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (v == net.sink()) return true;
    for (const Step& s : adj[static_cast<std::size_t>(v)]) {
      const Arc& a = net.arcs()[s.arc];
      const Capacity room = s.forward ? caps[s.arc] - flows[s.arc] : flows[s.arc];
      const NodeId w = s.forward ? a.head : a.tail;
      if (room > 0 && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

bool check_one_more_unit(const Network& net, const StateVector& x, Capacity d, ArcId i) {
  if (x[i] >= net.max_capacity(i)) {
    throw ContractError("arc " + std::to_string(i.value) + " is saturated in " + to_string(x));
  }
  const FlowState base = max_flow(net, x);
  if (base.value() != d) {
    throw ContractError("W(X) = " + std::to_string(base.value()) + " but d = " + std::to_string(d) + " for X = " +
                        to_string(x));
  }
  const Bumped raised = bump(net, x, i);
  return residual_reachable(push_flow(net, raised.state, d));
}

}  // namespace dmc
