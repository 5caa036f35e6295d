#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dmc/network.hpp"

namespace dmc {

/// A d-MC candidate C^d_ij: the on-cut arcs of C_i carry exactly d units in
/// total (each within W), every other arc sits at W.
struct Candidate {
  StateVector vector;
  std::size_t cut_index = 0;  ///< i, 1-based
  std::size_t ordinal = 0;    ///< j, 1-based within cut i
};

/// Lazily walks the compositions of `total` into parts bounded by `caps`, in
/// lexicographic order. Each composition is produced exactly once.
class BoundedCompositions {
 public:
  BoundedCompositions(std::vector<Capacity> caps, Capacity total);

  /// Advances to the next composition; false once exhausted.
  bool next();
  [[nodiscard]] const std::vector<Capacity>& parts() const noexcept { return parts_; }

 private:
  void fill_minimal_from(std::size_t pos, Capacity remaining);

  std::vector<Capacity> caps_;
  std::vector<Capacity> suffix_caps_;  // suffix_caps_[j] = caps_[j] + ... + caps_.back()
  std::vector<Capacity> parts_;
  Capacity total_;
  bool started_ = false;
  bool done_ = false;
};

/// Step 2 generator: every solution of Σ_{e in C} x_e = d, x_e <= W(e) on C,
/// x_e = W(e) off C, in lexicographic order of the on-cut components.
/// The stream is empty when d < 0 or d exceeds the cut's capacity.
class CandidateStream {
 public:
  CandidateStream(const Network& net, const MinCut& cut, Capacity d, std::size_t cut_index = 1);

  std::optional<Candidate> next();

 private:
  const MinCut* cut_;
  StateVector base_;
  BoundedCompositions compositions_;
  std::size_t cut_index_;
  std::size_t ordinal_ = 0;
};

/// Materializes a CandidateStream.
std::vector<Candidate> enumerate_candidates(const Network& net, const MinCut& cut, Capacity d,
                                            std::size_t cut_index = 1);

/// Number of compositions of d into parts 0 <= x_j <= caps[j], by
/// inclusion-exclusion over which parts overflow:
///   Σ_S (-1)^|S| C(d - Σ_{j in S}(caps[j]+1) + k - 1, k - 1).
/// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t count_compositions(std::span<const Capacity> caps, Capacity d);

/// σ_i for cut C at level d; equals the length of the CandidateStream.
std::uint64_t count_candidates(const Network& net, const MinCut& cut, Capacity d);

}  // namespace dmc
