#include "dmc/candidates.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmc {

BoundedCompositions::BoundedCompositions(std::vector<Capacity> caps, Capacity total)
    : caps_(std::move(caps)), suffix_caps_(caps_.size() + 1, 0), parts_(caps_.size(), 0), total_(total) {
  for (std::size_t j = caps_.size(); j-- > 0;) suffix_caps_[j] = suffix_caps_[j + 1] + caps_[j];
  done_ = total_ < 0 || total_ > suffix_caps_[0];
}

void BoundedCompositions::fill_minimal_from(std::size_t pos, Capacity remaining) {
  for (std::size_t j = pos; j < parts_.size(); ++j) {
    parts_[j] = std::max<Capacity>(0, remaining - suffix_caps_[j + 1]);
    remaining -= parts_[j];
  }
}

bool BoundedCompositions::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    fill_minimal_from(0, total_);
    return true;
  }
  // Rightmost position that can grow by one while the tail can still shrink by one.
  Capacity tail = 0;
  for (std::size_t j = parts_.size(); j-- > 0;) {
    if (tail > 0 && parts_[j] < caps_[j]) {
      ++parts_[j];
      fill_minimal_from(j + 1, tail - 1);
      return true;
    }
    tail += parts_[j];
  }
  done_ = true;
  return false;
}

CandidateStream::CandidateStream(const Network& net, const MinCut& cut, Capacity d, std::size_t cut_index)
    : cut_(&cut),
      base_(saturated_vector(net)),
      compositions_(
          [&] {
            std::vector<Capacity> caps;
            caps.reserve(cut.arc_ids.size());
            for (ArcId id : cut.arc_ids) caps.push_back(net.max_capacity(id));
            return caps;
          }(),
          d),
      cut_index_(cut_index) {}

std::optional<Candidate> CandidateStream::next() {
  if (!compositions_.next()) return std::nullopt;
  Candidate c{base_, cut_index_, ++ordinal_};
  const auto& parts = compositions_.parts();
  for (std::size_t j = 0; j < parts.size(); ++j) c.vector[cut_->arc_ids[j]] = parts[j];
  return c;
}

std::vector<Candidate> enumerate_candidates(const Network& net, const MinCut& cut, Capacity d,
                                            std::size_t cut_index) {
  std::vector<Candidate> out;
  CandidateStream stream(net, cut, d, cut_index);
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

namespace {

__extension__ typedef __int128 Wide;

// C(n, r) for 0 <= r; zero when n < r. Exact while the result fits in Wide.
Wide binomial(Capacity n, Capacity r) {
  if (r < 0 || n < r) return 0;
  r = std::min(r, n - r);
  Wide result = 1;
  for (Capacity i = 1; i <= r; ++i) {
    const Wide factor = n - r + i;
    if (result > (static_cast<Wide>(1) << 100) / factor) {
      throw std::overflow_error("binomial coefficient too large");
    }
    result = result * factor / i;
  }
  return result;
}

// Depth-first over overflow sets S, pruned once the shifted total goes negative.
void inclusion_exclusion(std::span<const Capacity> caps, std::size_t from, Capacity remaining, bool odd,
                         Wide& sum) {
  const auto k = static_cast<Capacity>(caps.size());
  const Wide term = binomial(remaining + k - 1, k - 1);
  sum += odd ? -term : term;
  for (std::size_t j = from; j < caps.size(); ++j) {
    const Capacity shifted = remaining - (caps[j] + 1);
    if (shifted < 0) continue;
    inclusion_exclusion(caps, j + 1, shifted, !odd, sum);
  }
}

}  // namespace

std::uint64_t count_compositions(std::span<const Capacity> caps, Capacity d) {
  if (d < 0) return 0;
  if (caps.empty()) return d == 0 ? 1 : 0;
  Wide sum = 0;
  inclusion_exclusion(caps, 0, d, false, sum);
  if (sum < 0 || sum > static_cast<Wide>(UINT64_MAX)) {
    throw std::overflow_error("composition count does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(sum);
}

std::uint64_t count_candidates(const Network& net, const MinCut& cut, Capacity d) {
  std::vector<Capacity> caps;
  caps.reserve(cut.arc_ids.size());
  for (ArcId id : cut.arc_ids) caps.push_back(net.max_capacity(id));
  return count_compositions(caps, d);
}

}  // namespace dmc
