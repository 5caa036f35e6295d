#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dmc/network.hpp"

namespace dmc {

/// Largest node count enumerate_min_cuts accepts; it scans 2^(n-2) vertex subsets.
inline constexpr int kMaxCutEnumerationNodes = 24;

/// True iff removing `arcs` disconnects sink from source.
bool is_cut(const Network& net, const std::vector<ArcId>& arcs);

/// True iff `arcs` is a cut and no proper subset is.
bool is_min_cut(const Network& net, const std::vector<ArcId>& arcs);

/// Every minimal s-t arc cut, sorted by size then lexicographically by arc id.
///
/// Scans vertex sets S with source in S and sink outside, keeps the arcs
/// leaving S, and drops non-minimal sets. Throws ValidationError when the
/// sink is unreachable even with every arc present (no MC exists) or when the
/// network exceeds kMaxCutEnumerationNodes.
std::vector<MinCut> enumerate_min_cuts(const Network& net);

/// Parses `cut <id> <arc_id> ...` lines; `#` comments are ignored. Cut ids must
/// run 1..p in order. Each cut is checked with is_min_cut.
std::vector<MinCut> parse_cuts(const Network& net, std::string_view text);
std::vector<MinCut> load_cuts(const Network& net, const std::string& path);

/// One `cut <k> <arc ids>` line per cut, k starting at 1.
std::string format_cuts(const std::vector<MinCut>& cuts);

/// Σ_{e in C} cap(e) under a capacity vector.
Capacity cut_capacity(const MinCut& cut, const StateVector& capacities);

}  // namespace dmc
