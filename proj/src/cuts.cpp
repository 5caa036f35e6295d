#include "dmc/cuts.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace dmc {

namespace {

bool sink_reachable(const Network& net, const std::vector<char>& removed) {
  std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(net.node_count()) + 1);
  for (std::size_t k = 0; k < net.arc_count(); ++k) {
    if (!removed[k]) out[static_cast<std::size_t>(net.arcs()[k].tail)].push_back(net.arcs()[k].head);
  }
  std::vector<char> seen(out.size(), 0);
  std::vector<NodeId> stack{net.source()};
  seen[static_cast<std::size_t>(net.source())] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (v == net.sink()) return true;
    for (NodeId w : out[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

std::vector<char> removal_mask(const Network& net, const std::vector<ArcId>& arcs) {
  std::vector<char> removed(net.arc_count(), 0);
  for (ArcId id : arcs) {
    if (id.value < 1 || id.index() >= net.arc_count()) {
      throw ValidationError("arc " + std::to_string(id.value) + " does not exist");
    }
    removed[id.index()] = 1;
  }
  return removed;
}

bool is_subset(const std::vector<ArcId>& small, const std::vector<ArcId>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool canonical_less(const MinCut& a, const MinCut& b) {
  if (a.arc_ids.size() != b.arc_ids.size()) return a.arc_ids.size() < b.arc_ids.size();
  return a.arc_ids < b.arc_ids;
}

}  // namespace

bool is_cut(const Network& net, const std::vector<ArcId>& arcs) {
  return !sink_reachable(net, removal_mask(net, arcs));
}

bool is_min_cut(const Network& net, const std::vector<ArcId>& arcs) {
  std::vector<char> removed = removal_mask(net, arcs);
  if (sink_reachable(net, removed)) return false;
  // Cuts are upward closed, so single-arc removals decide minimality.
  for (ArcId id : arcs) {
    removed[id.index()] = 0;
    const bool still_cut = !sink_reachable(net, removed);
    removed[id.index()] = 1;
    if (still_cut) return false;
  }
  return true;
}

std::vector<MinCut> enumerate_min_cuts(const Network& net) {
  const int n = net.node_count();
  if (n > kMaxCutEnumerationNodes) {
    throw ValidationError("minimal cut enumeration supports at most " + std::to_string(kMaxCutEnumerationNodes) +
                          " nodes, network has " + std::to_string(n));
  }
  if (!sink_reachable(net, std::vector<char>(net.arc_count(), 0))) {
    throw ValidationError("sink " + std::to_string(net.sink()) + " is unreachable from source " +
                          std::to_string(net.source()) + "; the network has no minimal cut");
  }

  // Free nodes are everything except source and sink; bit b of `mask` puts
  // free[b] on the source side.
  std::vector<NodeId> free_nodes;
  for (NodeId v = 1; v <= n; ++v) {
    if (v != net.source() && v != net.sink()) free_nodes.push_back(v);
  }
  std::set<std::vector<ArcId>> cuts;
  std::vector<char> source_side(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t subsets = std::uint64_t{1} << free_nodes.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::fill(source_side.begin(), source_side.end(), 0);
    source_side[static_cast<std::size_t>(net.source())] = 1;
    for (std::size_t b = 0; b < free_nodes.size(); ++b) {
      if (mask >> b & 1U) source_side[static_cast<std::size_t>(free_nodes[b])] = 1;
    }
    std::vector<ArcId> leaving;
    for (const Arc& a : net.arcs()) {
      if (source_side[static_cast<std::size_t>(a.tail)] && !source_side[static_cast<std::size_t>(a.head)]) {
        leaving.push_back(a.id);
      }
    }
    cuts.insert(std::move(leaving));
  }

  std::vector<MinCut> minimal;
  for (const auto& c : cuts) {
    const bool dominated = std::any_of(cuts.begin(), cuts.end(), [&](const std::vector<ArcId>& other) {
      return other.size() < c.size() && is_subset(other, c);
    });
    if (!dominated) minimal.push_back(MinCut{c});
  }
  std::sort(minimal.begin(), minimal.end(), canonical_less);
  return minimal;
}

std::vector<MinCut> parse_cuts(const Network& net, std::string_view text) {
  std::vector<MinCut> cuts;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword != "cut") throw ParseError(line_no, "expected 'cut <id> <arc_id> ...'");

    auto read_int = [&](const std::string& word, const char* what) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError(line_no, std::string(what) + " '" + word + "' is not an integer");
      }
      return value;
    };
    std::string word;
    if (!(words >> word)) throw ParseError(line_no, "missing cut id");
    const int id = read_int(word, "cut id");
    if (id != static_cast<int>(cuts.size()) + 1) {
      throw ValidationError("cut " + std::to_string(id) + " out of sequence (line " + std::to_string(line_no) + ")");
    }
    MinCut cut;
    while (words >> word) cut.arc_ids.push_back(ArcId{read_int(word, "arc id")});
    std::sort(cut.arc_ids.begin(), cut.arc_ids.end());
    if (std::adjacent_find(cut.arc_ids.begin(), cut.arc_ids.end()) != cut.arc_ids.end()) {
      throw ValidationError("cut " + std::to_string(id) + " repeats an arc (line " + std::to_string(line_no) + ")");
    }
    if (!is_min_cut(net, cut.arc_ids)) {
      throw ValidationError("cut " + std::to_string(id) + " is not a minimal cut (line " + std::to_string(line_no) +
                            ")");
    }
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

std::vector<MinCut> load_cuts(const Network& net, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open cut file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cuts(net, buffer.str());
}

std::string format_cuts(const std::vector<MinCut>& cuts) {
  std::ostringstream out;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    out << "cut " << k + 1;
    for (ArcId id : cuts[k].arc_ids) out << ' ' << id.value;
    out << '\n';
  }
  return out.str();
}

Capacity cut_capacity(const MinCut& cut, const StateVector& capacities) {
  Capacity total = 0;
  for (ArcId id : cut.arc_ids) total += capacities[id];
  return total;
}

}  // namespace dmc
