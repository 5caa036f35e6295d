#include "dmc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace dmc::oracle {

Capacity reference_max_flow(const Network& net, const StateVector& capacities) {
  const auto n = static_cast<std::size_t>(net.node_count()) + 1;
  std::vector<std::vector<Capacity>> residual(n, std::vector<Capacity>(n, 0));
  for (std::size_t k = 0; k < net.arc_count(); ++k) {
    const Arc& a = net.arcs()[k];
    residual[static_cast<std::size_t>(a.tail)][static_cast<std::size_t>(a.head)] += capacities.values.at(k);
  }
  const auto s = static_cast<std::size_t>(net.source());
  const auto t = static_cast<std::size_t>(net.sink());

  Capacity total = 0;
  std::vector<std::size_t> parent(n);
  for (;;) {
    std::fill(parent.begin(), parent.end(), n);
    parent[s] = s;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty() && parent[t] == n) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v = 1; v < n; ++v) {
        if (parent[v] == n && residual[u][v] > 0) {
          parent[v] = u;
          q.push(v);
        }
      }
    }
    if (parent[t] == n) return total;
    Capacity bottleneck = std::numeric_limits<Capacity>::max();
    for (std::size_t v = t; v != s; v = parent[v]) bottleneck = std::min(bottleneck, residual[parent[v]][v]);
    for (std::size_t v = t; v != s; v = parent[v]) {
      residual[parent[v]][v] -= bottleneck;
      residual[v][parent[v]] += bottleneck;
    }
    total += bottleneck;
  }
}

std::uint64_t state_space_size(const Network& net) {
  std::uint64_t size = 1;
  for (const Arc& a : net.arcs()) {
    const auto states = static_cast<std::uint64_t>(a.max_capacity) + 1;
    if (size > std::numeric_limits<std::uint64_t>::max() / states) return std::numeric_limits<std::uint64_t>::max();
    size *= states;
  }
  return size;
}

FlowTable::FlowTable(const Network& net) : net_(&net) {
  const std::uint64_t states = state_space_size(net);
  if (states > kMaxStates) {
    throw GuardExceeded("state space has " + std::to_string(states) + " vectors, limit is " +
                        std::to_string(kMaxStates));
  }
  std::size_t stride = 1;
  for (const Arc& a : net.arcs()) {
    strides_.push_back(stride);
    stride *= static_cast<std::size_t>(a.max_capacity) + 1;
  }
  values_.resize(static_cast<std::size_t>(states));
  StateVector x = zero_vector(net);
  for (std::size_t idx = 0; idx < values_.size(); ++idx) {
    values_[idx] = reference_max_flow(net, x);
    // Odometer increment, arc 1 fastest.
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x.values[k] < net.arcs()[k].max_capacity) {
        ++x.values[k];
        break;
      }
      x.values[k] = 0;
    }
  }
}

std::size_t FlowTable::index_of(const StateVector& x) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < strides_.size(); ++k) idx += static_cast<std::size_t>(x.values.at(k)) * strides_[k];
  return idx;
}

StateVector FlowTable::state_at(std::size_t index) const {
  StateVector x = zero_vector(*net_);
  for (std::size_t k = 0; k < strides_.size(); ++k) {
    const auto radix = static_cast<std::size_t>(net_->arcs()[k].max_capacity) + 1;
    x.values[k] = static_cast<Capacity>(index / strides_[k] % radix);
  }
  return x;
}

std::vector<StateVector> brute_force_dmcs(const Network& net, Capacity d) {
  return brute_force_dmcs(FlowTable(net), d);
}

std::vector<StateVector> brute_force_dmcs(const FlowTable& table, Capacity d) {
  const Network& net = table.network();
  std::vector<StateVector> out;
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    if (table.at(idx) != d) continue;
    const StateVector x = table.state_at(idx);
    bool maximal = true;
    for (std::size_t k = 0; k < net.arc_count() && maximal; ++k) {
      if (x.values[k] < net.arcs()[k].max_capacity) {
        maximal = table.at(idx + table.stride(ArcId::from_index(k))) > d;
      }
    }
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double reliability_exhaustive(const Network& net, const EdgeDistribution& dist, Capacity d, Threshold threshold) {
  return reliability_exhaustive(FlowTable(net), dist, d, threshold);
}

double reliability_exhaustive(const FlowTable& table, const EdgeDistribution& dist, Capacity d,
                              Threshold threshold) {
  if (dist.arc_count() != table.network().arc_count()) {
    throw std::invalid_argument("distribution does not match the network");
  }
  double total = 0.0;
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    const Capacity w = table.at(idx);
    const bool counted = threshold == Threshold::at_least ? w >= d : w > d;
    if (counted) total += dist.mass(table.state_at(idx));
  }
  return total;
}

namespace {

// Adds (-1)^(depth+1) Pr[X <= meet] for every non-empty subset extending the
// current one with indices >= from.
void expand(const std::vector<StateVector>& dmcs, const EdgeDistribution& dist, std::size_t from,
            const StateVector& meet, bool odd, double& sum) {
  for (std::size_t j = from; j < dmcs.size(); ++j) {
    StateVector next = meet;
    for (std::size_t k = 0; k < next.size(); ++k) next.values[k] = std::min(next.values[k], dmcs[j].values[k]);
    double p = 1.0;
    for (std::size_t k = 0; k < next.size(); ++k) p *= dist.cdf(ArcId::from_index(k), next.values[k]);
    sum += odd ? p : -p;
    expand(dmcs, dist, j + 1, next, !odd, sum);
  }
}

}  // namespace

double reliability_from_dmcs(std::vector<StateVector> dmcs, const EdgeDistribution& dist) {
  std::sort(dmcs.begin(), dmcs.end());
  dmcs.erase(std::unique(dmcs.begin(), dmcs.end()), dmcs.end());
  if (dmcs.empty()) throw std::invalid_argument("reliability_from_dmcs needs a non-empty d-MC set");
  if (dmcs.size() > kMaxInclusionExclusionTerms) {
    throw GuardExceeded("inclusion-exclusion over " + std::to_string(dmcs.size()) + " d-MCs exceeds the limit of " +
                        std::to_string(kMaxInclusionExclusionTerms));
  }
  StateVector top(std::vector<Capacity>(dist.arc_count(), std::numeric_limits<Capacity>::max()));
  double sum = 0.0;
  expand(dmcs, dist, 0, top, true, sum);
  return sum;
}

}  // namespace dmc::oracle
