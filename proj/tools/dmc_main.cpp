// dmc: enumerate d-MinCuts of a stochastic-flow network.
//
// Exit codes: 0 ok (an empty result is not an error), 2 unreadable/invalid
// input or bad usage, 3 infeasible demand, 4 exhaustive-method guard exceeded.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dmc/candidates.hpp"
#include "dmc/cuts.hpp"
#include "dmc/maxflow.hpp"
#include "dmc/oracle.hpp"
#include "dmc/report_json.hpp"
#include "dmc/solver.hpp"
#include "dmc/verify.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDemand = 3;
constexpr int kExitGuard = 4;

class InfeasibleDemand : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string network_path;
  std::optional<std::string> cuts_path;
  dmc::Capacity demand = 0;
};

void require_nonnegative(dmc::Capacity d) {
  if (d < 0) throw InfeasibleDemand("demand " + std::to_string(d) + " is negative");
}

std::vector<dmc::MinCut> cuts_for(const dmc::Network& net, const std::optional<std::string>& path) {
  return path ? dmc::load_cuts(net, *path) : dmc::enumerate_min_cuts(net);
}

void print_listing(const std::vector<dmc::StateVector>& dmcs) {
  for (const auto& x : dmcs) std::cout << dmc::to_string(x) << '\n';
}

int cmd_solve(const CommonArgs& args, bool json, unsigned threads) {
  require_nonnegative(args.demand);
  const dmc::Network net = dmc::load_network_file(args.network_path).network;
  const auto cuts = cuts_for(net, args.cuts_path);
  const dmc::SolveReport report = dmc::find_all_dmcs(net, args.demand, cuts, {threads});
  if (report.demand_exceeds_capacity) {
    std::cerr << "note: demand " << args.demand << " exceeds the network's maximum flow; no d-MC exists\n";
  }
  if (json) {
    std::cout << dmc::format_report_json(report) << '\n';
    return 0;
  }
  print_listing(report.dmcs);
  const auto& p = report.parameters;
  const auto& c = report.counters;
  std::cout << "# d=" << p.d << " p=" << p.p << " m=" << p.m << " sigma_max=" << p.sigma_max
            << " sigma_sum=" << p.sigma_sum << '\n'
            << "# dmcs=" << report.dmcs.size() << " candidates_total=" << c.candidates_total
            << " maxflow_calls=" << c.maxflow_calls << " residual_searches=" << c.residual_searches
            << " duplicates_removed=" << c.duplicates_removed << '\n'
            << "# audit_complexity=" << (dmc::audit_complexity(report) ? "pass" : "FAIL") << '\n';
  return 0;
}

int cmd_check_flaw(const CommonArgs& args) {
  require_nonnegative(args.demand);
  const dmc::Network net = dmc::load_network_file(args.network_path).network;
  const auto cuts = cuts_for(net, args.cuts_path);
  std::uint64_t candidates = 0;
  std::uint64_t disagreements = 0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    dmc::CandidateStream stream(net, cuts[i], args.demand, i + 1);
    while (auto c = stream.next()) {
      ++candidates;
      const dmc::Verdict corrected = dmc::verify(net, c->vector, args.demand);
      const dmc::Verdict flawed = dmc::verify_flawed(net, c->vector, args.demand);
      if (corrected.is_dmc == flawed.is_dmc) continue;
      ++disagreements;

      // Witness arc: where the corrected test failed, else the first unsaturated arc.
      std::optional<dmc::ArcId> arc = corrected.failing_arc;
      if (!arc) {
        const auto unsaturated = dmc::unsaturated_set(net, c->vector);
        if (!unsaturated.empty()) arc = unsaturated.front();
      }
      std::cout << "cut=" << c->cut_index << " j=" << c->ordinal << " X=" << dmc::to_string(c->vector)
                << " W(X)=" << corrected.flow_value;
      if (arc) {
        const auto raised = dmc::bump(net, c->vector, *arc).state;
        std::cout << " arc=" << arc->value << " W=" << dmc::max_flow(net, raised).value();
      } else {
        std::cout << " arc=- W=-";
      }
      std::cout << " corrected=" << (corrected.is_dmc ? "accept" : "reject")
                << " flawed=" << (flawed.is_dmc ? "accept" : "reject") << '\n';
    }
  }
  std::cout << "# d=" << args.demand << " candidates=" << candidates << " disagreements=" << disagreements << '\n';
  return 0;
}

int cmd_oracle(const CommonArgs& args) {
  require_nonnegative(args.demand);
  const dmc::Network net = dmc::load_network_file(args.network_path).network;
  const auto dmcs = dmc::oracle::brute_force_dmcs(net, args.demand);
  print_listing(dmcs);
  std::cout << "# d=" << args.demand << " states=" << dmc::oracle::state_space_size(net) << " dmcs=" << dmcs.size()
            << '\n';
  return 0;
}

int cmd_mincuts(const std::string& network_path) {
  const dmc::Network net = dmc::load_network_file(network_path).network;
  std::cout << dmc::format_cuts(dmc::enumerate_min_cuts(net));
  return 0;
}

// Pr[W(X) >= d] (or > d) as 1 - Pr[W(X) <= level] from the level-MCs.
double reliability_via_dmcs(const dmc::Network& net, const std::vector<dmc::MinCut>& cuts,
                            const dmc::EdgeDistribution& dist, dmc::Capacity d, dmc::oracle::Threshold threshold) {
  const dmc::Capacity level = threshold == dmc::oracle::Threshold::at_least ? d - 1 : d;
  if (level < 0) return 1.0;
  const dmc::Capacity capacity = dmc::max_flow(net, dmc::saturated_vector(net)).value();
  if (level >= capacity) return 0.0;
  const auto report = dmc::find_all_dmcs(net, level, cuts);
  return 1.0 - dmc::oracle::reliability_from_dmcs(report.dmcs, dist);
}

int cmd_reliability(const CommonArgs& args, const std::string& method, const std::string& threshold_name) {
  const dmc::NetworkFile file = dmc::load_network_file(args.network_path);
  const dmc::Network& net = file.network;
  const dmc::EdgeDistribution dist = file.distribution ? *file.distribution : dmc::EdgeDistribution::uniform(net);
  const auto threshold =
      threshold_name == "gt" ? dmc::oracle::Threshold::exceeds : dmc::oracle::Threshold::at_least;
  double r = 0.0;
  if (method == "exhaustive") {
    r = dmc::oracle::reliability_exhaustive(net, dist, args.demand, threshold);
  } else {
    r = reliability_via_dmcs(net, cuts_for(net, args.cuts_path), dist, args.demand, threshold);
  }
  std::printf("%.12f\n", r);
  return 0;
}

void add_network(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("network,--network", args.network_path, "network file")->required();
}

void add_demand(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--demand,-d", args.demand, "demand level d")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate d-MinCuts (d-MCs) of a stochastic-flow network"};
  app.require_subcommand(1);

  CommonArgs args;
  bool json = false;
  unsigned threads = 1;
  std::string method = "dmcs";
  std::string threshold = "ge";

  auto* solve = app.add_subcommand("solve", "find all d-MCs from the minimal cuts");
  add_network(solve, args);
  add_demand(solve, args);
  solve->add_option("--cuts", args.cuts_path, "minimal cut file (default: enumerate)");
  solve->add_flag("--json", json, "print the report as JSON");
  solve->add_option("--threads", threads, "worker threads over cuts")->check(CLI::Range(1U, 256U));

  auto* check_flaw = app.add_subcommand("check-flaw", "list candidates where the published test disagrees");
  add_network(check_flaw, args);
  add_demand(check_flaw, args);
  check_flaw->add_option("--cuts", args.cuts_path, "minimal cut file (default: enumerate)");

  auto* oracle = app.add_subcommand("oracle", "brute-force d-MCs straight from the definition");
  add_network(oracle, args);
  add_demand(oracle, args);

  auto* mincuts = app.add_subcommand("mincuts", "print every minimal cut in cut-file format");
  add_network(mincuts, args);

  auto* reliability = app.add_subcommand("reliability", "probability that the max flow meets the demand");
  add_network(reliability, args);
  add_demand(reliability, args);
  reliability->add_option("--cuts", args.cuts_path, "minimal cut file (default: enumerate)");
  reliability->add_option("--method", method, "dmcs or exhaustive")
      ->check(CLI::IsMember({"dmcs", "exhaustive"}));
  reliability->add_option("--threshold", threshold, "ge: W >= d (default), gt: W > d")
      ->check(CLI::IsMember({"ge", "gt"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(args, json, threads);
    if (check_flaw->parsed()) return cmd_check_flaw(args);
    if (oracle->parsed()) return cmd_oracle(args);
    if (mincuts->parsed()) return cmd_mincuts(args.network_path);
    if (reliability->parsed()) return cmd_reliability(args, method, threshold);
  } catch (const dmc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const dmc::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InfeasibleDemand& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDemand;
  } catch (const dmc::oracle::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  }
  return 0;
}
