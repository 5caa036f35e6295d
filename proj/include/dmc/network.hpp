#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmc {

using Capacity = std::int64_t;
using NodeId = int;

/// 1-based arc identifier, matching the order arcs appear in a network file.
struct ArcId {
  int value = 0;

  [[nodiscard]] constexpr std::size_t index() const { return static_cast<std::size_t>(value - 1); }
  static constexpr ArcId from_index(std::size_t i) { return ArcId{static_cast<int>(i) + 1}; }

  friend constexpr auto operator<=>(ArcId, ArcId) = default;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a network invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arc {
  ArcId id;
  NodeId tail = 0;
  NodeId head = 0;
  Capacity max_capacity = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed capacitated network with a designated source and sink.
///
/// Nodes are 1..n. Arcs are stored in id order; arc k has id k. Immutable
/// after construction, so instances can be shared freely across threads.
class Network {
 public:
  /// Validates and builds. Throws ValidationError naming the offending arc or node.
  static Network make(int node_count, NodeId source, NodeId sink, std::vector<Arc> arcs);

  [[nodiscard]] int node_count() const noexcept { return node_count_; }
  [[nodiscard]] std::size_t arc_count() const noexcept { return arcs_.size(); }
  [[nodiscard]] NodeId source() const noexcept { return source_; }
  [[nodiscard]] NodeId sink() const noexcept { return sink_; }
  [[nodiscard]] const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  [[nodiscard]] const Arc& arc(ArcId id) const { return arcs_.at(id.index()); }
  [[nodiscard]] Capacity max_capacity(ArcId id) const { return arc(id).max_capacity; }
  /// Sum of all max capacities; checked against overflow at construction.
  [[nodiscard]] Capacity total_capacity() const noexcept { return total_capacity_; }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  Network() = default;

  int node_count_ = 0;
  NodeId source_ = 0;
  NodeId sink_ = 0;
  std::vector<Arc> arcs_;
  Capacity total_capacity_ = 0;
};

/// A system-state vector X = (x_1, ..., x_m), one current capacity per arc.
/// Ordering is lexicographic over the components.
struct StateVector {
  std::vector<Capacity> values;

  StateVector() = default;
  explicit StateVector(std::vector<Capacity> v) : values(std::move(v)) {}

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] Capacity operator[](ArcId id) const { return values.at(id.index()); }
  [[nodiscard]] Capacity& operator[](ArcId id) { return values.at(id.index()); }

  friend auto operator<=>(const StateVector&, const StateVector&) = default;
  friend bool operator==(const StateVector&, const StateVector&) = default;
};

/// Formats as `(x1,x2,...,xm)`.
std::string to_string(const StateVector& x);

/// A minimal s-t cut: sorted, duplicate-free arc ids.
struct MinCut {
  std::vector<ArcId> arc_ids;

  friend auto operator<=>(const MinCut&, const MinCut&) = default;
  friend bool operator==(const MinCut&, const MinCut&) = default;
};

/// Independent per-arc probability mass functions over capacity states 0..W(e).
class EdgeDistribution {
 public:
  static constexpr double kSumTolerance = 1e-12;

  /// Throws ValidationError when a pmf has the wrong length, a negative mass,
  /// or does not sum to 1 within kSumTolerance.
  static EdgeDistribution make(const Network& net, std::vector<std::vector<double>> pmfs);
  static EdgeDistribution uniform(const Network& net);

  [[nodiscard]] const std::vector<double>& pmf(ArcId id) const { return pmfs_.at(id.index()); }
  [[nodiscard]] std::size_t arc_count() const noexcept { return pmfs_.size(); }
  /// Pr[x_id <= level].
  [[nodiscard]] double cdf(ArcId id, Capacity level) const;
  /// Pr[X == x] under arc independence.
  [[nodiscard]] double mass(const StateVector& x) const;

 private:
  std::vector<std::vector<double>> pmfs_;
  std::vector<std::vector<double>> cdfs_;
};

struct NetworkFile {
  Network network;
  /// Present when the file had at least one `prob` line. Arcs without one get
  /// a uniform pmf.
  std::optional<EdgeDistribution> distribution;
};

/// Parses the line-oriented network format:
///
///     nodes <n> source <s> sink <t>
///     edge <id> <tail> <head> <max_capacity>
///     prob <id> <p0> ... <pW>
///
/// `#` starts a comment. Edge lines must list ids 1..m in order.
NetworkFile parse_network_file(std::string_view text);
Network parse_network(std::string_view text);
NetworkFile load_network_file(const std::string& path);

/// Inverse of parse_network (no comments, no prob lines).
std::string serialize_network(const Network& net);

StateVector saturated_vector(const Network& net);
StateVector zero_vector(const Network& net);

/// True iff 0 <= x_i <= W(e_i) for every arc and the length matches.
bool is_within_capacity(const Network& net, const StateVector& x);

struct Bumped {
  StateVector state;
  /// Set when the incremented component exceeds W(e_i).
  bool over_capacity = false;
};

/// X + 0(e_i). No clamping: the caller decides what an over-capacity result means.
Bumped bump(const Network& net, const StateVector& x, ArcId i);

/// U(X) in ascending id order.
std::vector<ArcId> unsaturated_set(const Network& net, const StateVector& x);

}  // namespace dmc
