#include "dmc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "dmc/candidates.hpp"
#include "dmc/cuts.hpp"
#include "dmc/maxflow.hpp"
#include "dmc/verify.hpp"

namespace dmc {

namespace {

struct CutResult {
  std::vector<StateVector> dmcs;
  std::uint64_t candidates = 0;
  std::uint64_t maxflow_calls = 0;
  std::uint64_t residual_searches = 0;
};

CutResult solve_cut(const Network& net, Capacity d, const MinCut& cut, std::size_t cut_index) {
  CutResult r;
  CandidateStream stream(net, cut, d, cut_index);
  while (auto candidate = stream.next()) {
    ++r.candidates;
    ++r.maxflow_calls;
    const FlowState fs = max_flow(net, candidate->vector);
    if (fs.value() != d) continue;
    const Verdict verdict = verify(fs, d);
    r.residual_searches += verdict.searches;
    if (verdict.is_dmc) r.dmcs.push_back(std::move(candidate->vector));
  }
  return r;
}

}  // namespace

SolveReport find_all_dmcs(const Network& net, Capacity d, const std::vector<MinCut>& cuts,
                          const SolveOptions& options) {
  if (cuts.empty()) throw std::invalid_argument("find_all_dmcs needs at least one minimal cut");
  if (d < 0) throw std::invalid_argument("demand must be non-negative, got " + std::to_string(d));

  std::vector<CutResult> results(cuts.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(cuts.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < cuts.size(); ++i) results[i] = solve_cut(net, d, cuts[i], i + 1);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cuts.size(); i = next++) results[i] = solve_cut(net, d, cuts[i], i + 1);
      });
    }
    for (auto& t : pool) t.join();
  }

  SolveReport report;
  report.parameters.d = d;
  report.parameters.p = cuts.size();
  report.parameters.m = net.arc_count();
  const StateVector w = saturated_vector(net);
  Capacity smallest_cut = cut_capacity(cuts.front(), w);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const std::uint64_t sigma = count_candidates(net, cuts[i], d);
    report.parameters.sigma_max = std::max(report.parameters.sigma_max, sigma);
    report.parameters.sigma_sum += sigma;
    smallest_cut = std::min(smallest_cut, cut_capacity(cuts[i], w));

    const CutResult& r = results[i];
    report.counters.candidates_per_cut.push_back(r.candidates);
    report.counters.candidates_total += r.candidates;
    report.counters.maxflow_calls += r.maxflow_calls;
    report.counters.residual_searches += r.residual_searches;
    report.counters.verified_candidates += r.dmcs.size();
    report.dmcs.insert(report.dmcs.end(), r.dmcs.begin(), r.dmcs.end());
  }
  std::sort(report.dmcs.begin(), report.dmcs.end());
  report.dmcs.erase(std::unique(report.dmcs.begin(), report.dmcs.end()), report.dmcs.end());
  report.counters.duplicates_removed = report.counters.verified_candidates - report.dmcs.size();
  // Max-flow min-cut: with the complete MC list, W(W) is the smallest cut capacity.
  report.demand_exceeds_capacity = d > smallest_cut;
  return report;
}

bool audit_complexity(const SolveReport& report) {
  const auto& c = report.counters;
  const auto& p = report.parameters;
  return c.maxflow_calls <= c.candidates_total && c.candidates_total <= p.sigma_sum &&
         p.sigma_sum <= p.p * p.sigma_max && c.residual_searches <= p.m * c.candidates_total;
}

}  // namespace dmc
