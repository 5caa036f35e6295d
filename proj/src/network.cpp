#include "dmc/network.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace dmc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

Network Network::make(int node_count, NodeId source, NodeId sink, std::vector<Arc> arcs) {
  if (node_count < 2) {
    throw ValidationError("network needs at least 2 nodes, got " + std::to_string(node_count));
  }
  auto check_node = [&](NodeId v, const std::string& role) {
    if (v < 1 || v > node_count) {
      throw ValidationError(role + " node " + std::to_string(v) + " outside [1, " + std::to_string(node_count) + "]");
    }
  };
  check_node(source, "source");
  check_node(sink, "sink");
  if (source == sink) {
    throw ValidationError("source and sink are both node " + std::to_string(source));
  }

  Capacity total = 0;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const Arc& a = arcs[k];
    const std::string name = "arc " + std::to_string(a.id.value);
    if (a.id != ArcId::from_index(k)) {
      throw ValidationError(name + " out of sequence: expected id " + std::to_string(k + 1));
    }
    check_node(a.tail, name + " tail");
    check_node(a.head, name + " head");
    if (a.tail == a.head) {
      throw ValidationError(name + " is a self-loop on node " + std::to_string(a.tail));
    }
    if (a.max_capacity < 0) {
      throw ValidationError(name + " has negative capacity");
    }
    if (a.max_capacity > std::numeric_limits<Capacity>::max() - total) {
      throw ValidationError(name + ": total capacity overflows");
    }
    total += a.max_capacity;
  }

  Network net;
  net.node_count_ = node_count;
  net.source_ = source;
  net.sink_ = sink;
  net.arcs_ = std::move(arcs);
  net.total_capacity_ = total;
  return net;
}

std::string to_string(const StateVector& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x.values[i]);
  }
  out += ')';
  return out;
}

EdgeDistribution EdgeDistribution::make(const Network& net, std::vector<std::vector<double>> pmfs) {
  if (pmfs.size() != net.arc_count()) {
    throw ValidationError("distribution covers " + std::to_string(pmfs.size()) + " arcs, network has " +
                          std::to_string(net.arc_count()));
  }
  EdgeDistribution dist;
  dist.cdfs_.reserve(pmfs.size());
  for (std::size_t k = 0; k < pmfs.size(); ++k) {
    const auto& pmf = pmfs[k];
    const std::string name = "arc " + std::to_string(k + 1);
    const auto states = static_cast<std::size_t>(net.arcs()[k].max_capacity) + 1;
    if (pmf.size() != states) {
      throw ValidationError(name + ": pmf has " + std::to_string(pmf.size()) + " entries, expected " +
                            std::to_string(states));
    }
    double sum = 0.0;
    std::vector<double> cdf;
    cdf.reserve(pmf.size());
    for (double p : pmf) {
      if (!(p >= 0.0) || !std::isfinite(p)) {
        throw ValidationError(name + ": pmf has a negative or non-finite mass");
      }
      sum += p;
      cdf.push_back(sum);
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << name << ": pmf sums to " << sum;
      throw ValidationError(msg.str());
    }
    dist.cdfs_.push_back(std::move(cdf));
  }
  dist.pmfs_ = std::move(pmfs);
  return dist;
}

EdgeDistribution EdgeDistribution::uniform(const Network& net) {
  std::vector<std::vector<double>> pmfs;
  pmfs.reserve(net.arc_count());
  for (const Arc& a : net.arcs()) {
    const auto states = static_cast<std::size_t>(a.max_capacity) + 1;
    pmfs.emplace_back(states, 1.0 / static_cast<double>(states));
  }
  return make(net, std::move(pmfs));
}

double EdgeDistribution::cdf(ArcId id, Capacity level) const {
  const auto& c = cdfs_.at(id.index());
  if (level < 0) return 0.0;
  if (static_cast<std::size_t>(level) >= c.size()) return 1.0;
  return c[static_cast<std::size_t>(level)];
}

double EdgeDistribution::mass(const StateVector& x) const {
  double p = 1.0;
  for (std::size_t k = 0; k < pmfs_.size(); ++k) {
    p *= pmfs_[k].at(static_cast<std::size_t>(x.values.at(k)));
  }
  return p;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    if (end > pos) words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

template <typename T>
T parse_integer(std::string_view word, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, std::string(what) + " '" + std::string(word) + "' out of range");
  }
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, std::string(what) + " '" + std::string(word) + "' is not an integer");
  }
  return value;
}

double parse_probability(std::string_view word, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, "probability '" + std::string(word) + "' is not a number");
  }
  return value;
}

}  // namespace

NetworkFile parse_network_file(std::string_view text) {
  std::optional<int> node_count;
  NodeId source = 0;
  NodeId sink = 0;
  std::vector<Arc> arcs;
  std::set<int> seen_ids;
  std::map<int, std::pair<std::size_t, std::vector<double>>> probs;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    const std::string_view keyword = words[0];
    if (!node_count) {
      if (keyword != "nodes" || words.size() != 6 || words[2] != "source" || words[4] != "sink") {
        throw ParseError(line_no, "expected 'nodes <n> source <s> sink <t>'");
      }
      node_count = parse_integer<int>(words[1], line_no, "node count");
      source = parse_integer<int>(words[3], line_no, "source");
      sink = parse_integer<int>(words[5], line_no, "sink");
    } else if (keyword == "edge") {
      if (words.size() != 5) {
        throw ParseError(line_no, "expected 'edge <id> <tail> <head> <max_capacity>'");
      }
      Arc a;
      a.id = ArcId{parse_integer<int>(words[1], line_no, "arc id")};
      a.tail = parse_integer<int>(words[2], line_no, "tail");
      a.head = parse_integer<int>(words[3], line_no, "head");
      a.max_capacity = parse_integer<Capacity>(words[4], line_no, "capacity");
      if (!seen_ids.insert(a.id.value).second) {
        throw ValidationError("duplicate arc id " + std::to_string(a.id.value) + " (line " +
                              std::to_string(line_no) + ")");
      }
      arcs.push_back(a);
    } else if (keyword == "prob") {
      if (words.size() < 3) {
        throw ParseError(line_no, "expected 'prob <id> <p0> ... <pW>'");
      }
      const int id = parse_integer<int>(words[1], line_no, "arc id");
      std::vector<double> pmf;
      for (std::size_t k = 2; k < words.size(); ++k) pmf.push_back(parse_probability(words[k], line_no));
      if (!probs.emplace(id, std::make_pair(line_no, std::move(pmf))).second) {
        throw ValidationError("duplicate prob line for arc " + std::to_string(id) + " (line " +
                              std::to_string(line_no) + ")");
      }
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!node_count) {
    throw ParseError(0, "missing 'nodes' header line");
  }

  NetworkFile file{Network::make(*node_count, source, sink, std::move(arcs)), std::nullopt};
  if (!probs.empty()) {
    std::vector<std::vector<double>> pmfs;
    const Network& net = file.network;
    for (const Arc& a : net.arcs()) {
      auto it = probs.find(a.id.value);
      if (it == probs.end()) {
        const auto states = static_cast<std::size_t>(a.max_capacity) + 1;
        pmfs.emplace_back(states, 1.0 / static_cast<double>(states));
      } else {
        pmfs.push_back(std::move(it->second.second));
        probs.erase(it);
      }
    }
    if (!probs.empty()) {
      throw ValidationError("prob line for unknown arc " + std::to_string(probs.begin()->first) + " (line " +
                            std::to_string(probs.begin()->second.first) + ")");
    }
    file.distribution = EdgeDistribution::make(net, std::move(pmfs));
  }
  return file;
}

Network parse_network(std::string_view text) { return parse_network_file(text).network; }

NetworkFile load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open network file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_network_file(buffer.str());
}

std::string serialize_network(const Network& net) {
  std::ostringstream out;
  out << "nodes " << net.node_count() << " source " << net.source() << " sink " << net.sink() << '\n';
  for (const Arc& a : net.arcs()) {
    out << "edge " << a.id.value << ' ' << a.tail << ' ' << a.head << ' ' << a.max_capacity << '\n';
  }
  return out.str();
}

StateVector saturated_vector(const Network& net) {
  std::vector<Capacity> v;
  v.reserve(net.arc_count());
  for (const Arc& a : net.arcs()) v.push_back(a.max_capacity);
  return StateVector(std::move(v));
}

StateVector zero_vector(const Network& net) { return StateVector(std::vector<Capacity>(net.arc_count(), 0)); }

bool is_within_capacity(const Network& net, const StateVector& x) {
  if (x.size() != net.arc_count()) return false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x.values[k] < 0 || x.values[k] > net.arcs()[k].max_capacity) return false;
  }
  return true;
}

Bumped bump(const Network& net, const StateVector& x, ArcId i) {
  Bumped out{x, false};
  Capacity& slot = out.state[i];
  ++slot;
  out.over_capacity = slot > net.max_capacity(i);
  return out;
}

std::vector<ArcId> unsaturated_set(const Network& net, const StateVector& x) {
  std::vector<ArcId> ids;
  for (std::size_t k = 0; k < net.arc_count(); ++k) {
    if (x.values.at(k) < net.arcs()[k].max_capacity) ids.push_back(ArcId::from_index(k));
  }
  return ids;
}

}  // namespace dmc
