#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dmc/network.hpp"

// Brute-force ground truth. Nothing here calls into the maxflow, verify or
// solver modules: the max flow below is a separate Edmonds-Karp over a node
// capacity matrix, so agreement with the solver is a real cross-check.
namespace dmc::oracle {

/// Largest state box Π(W(e)+1) the exhaustive sweeps will visit.
inline constexpr std::uint64_t kMaxStates = 10'000'000;
/// Largest d-MC set reliability_from_dmcs expands (2^n terms).
inline constexpr std::size_t kMaxInclusionExclusionTerms = 20;

/// An exhaustive method refused an input that exceeds its guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edmonds-Karp on an n x n capacity matrix (parallel arcs summed).
Capacity reference_max_flow(const Network& net, const StateVector& capacities);

/// Π(W(e)+1), saturating at UINT64_MAX.
std::uint64_t state_space_size(const Network& net);

/// W(X) for every X in the box [0, W], indexed mixed-radix with arc 1 as the
/// fastest-moving digit. Throws GuardExceeded above kMaxStates.
class FlowTable {
 public:
  explicit FlowTable(const Network& net);
  explicit FlowTable(Network&&) = delete;  // keeps a pointer to the network

  [[nodiscard]] const Network& network() const noexcept { return *net_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] Capacity at(std::size_t index) const { return values_[index]; }
  [[nodiscard]] Capacity at(const StateVector& x) const { return values_[index_of(x)]; }
  [[nodiscard]] std::size_t index_of(const StateVector& x) const;
  [[nodiscard]] StateVector state_at(std::size_t index) const;
  /// Index distance between X and X + 0(e_id).
  [[nodiscard]] std::size_t stride(ArcId id) const { return strides_[id.index()]; }

 private:
  const Network* net_;
  std::vector<std::size_t> strides_;
  std::vector<Capacity> values_;
};

/// Every X in [0, W] with W(X) = d and W(X + 0(e_i)) > d for all e_i in U(X),
/// tested literally. Sorted lexicographically.
std::vector<StateVector> brute_force_dmcs(const Network& net, Capacity d);
std::vector<StateVector> brute_force_dmcs(const FlowTable& table, Capacity d);

enum class Threshold {
  at_least,  ///< Pr[W(X) >= d] (default)
  exceeds,   ///< Pr[W(X) > d]
};

/// Sums Π_i pmf_i(x_i) over the whole box for the X meeting the threshold.
double reliability_exhaustive(const Network& net, const EdgeDistribution& dist, Capacity d,
                              Threshold threshold = Threshold::at_least);
double reliability_exhaustive(const FlowTable& table, const EdgeDistribution& dist, Capacity d,
                              Threshold threshold = Threshold::at_least);

/// Pr[W(X) <= d] = Pr[∪_j {X <= X_j}] from the complete d-MC set, by exact
/// inclusion-exclusion; each intersection is the componentwise minimum.
/// Duplicates are ignored. Throws std::invalid_argument for an empty set and
/// GuardExceeded above kMaxInclusionExclusionTerms distinct vectors.
double reliability_from_dmcs(std::vector<StateVector> dmcs, const EdgeDistribution& dist);

}  // namespace dmc::oracle
