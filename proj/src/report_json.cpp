#include "dmc/report_json.hpp"

#include "json.hpp"

namespace dmc {

using nlohmann::ordered_json;

std::string format_report_json(const SolveReport& report, int indent) {
  ordered_json doc;
  doc["schema"] = "dmc-solve-report/1";
  const auto& p = report.parameters;
  doc["parameters"] = {{"d", p.d}, {"p", p.p}, {"m", p.m}, {"sigma_max", p.sigma_max}, {"sigma_sum", p.sigma_sum}};
  doc["demand_exceeds_capacity"] = report.demand_exceeds_capacity;
  const auto& c = report.counters;
  doc["counters"] = {{"maxflow_calls", c.maxflow_calls},
                     {"candidates_total", c.candidates_total},
                     {"candidates_per_cut", c.candidates_per_cut},
                     {"residual_searches", c.residual_searches},
                     {"verified_candidates", c.verified_candidates},
                     {"duplicates_removed", c.duplicates_removed}};
  ordered_json list = ordered_json::array();
  for (const StateVector& x : report.dmcs) list.push_back(x.values);
  doc["dmcs"] = std::move(list);
  return doc.dump(indent);
}

SolveReport parse_report_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(0, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != "dmc-solve-report/1") {
      throw ParseError(0, "unsupported report schema '" + doc.at("schema").get<std::string>() + "'");
    }
    SolveReport report;
    const auto& p = doc.at("parameters");
    report.parameters.d = p.at("d").get<Capacity>();
    report.parameters.p = p.at("p").get<std::uint64_t>();
    report.parameters.m = p.at("m").get<std::uint64_t>();
    report.parameters.sigma_max = p.at("sigma_max").get<std::uint64_t>();
    report.parameters.sigma_sum = p.at("sigma_sum").get<std::uint64_t>();
    report.demand_exceeds_capacity = doc.at("demand_exceeds_capacity").get<bool>();
    const auto& c = doc.at("counters");
    report.counters.maxflow_calls = c.at("maxflow_calls").get<std::uint64_t>();
    report.counters.candidates_total = c.at("candidates_total").get<std::uint64_t>();
    report.counters.candidates_per_cut = c.at("candidates_per_cut").get<std::vector<std::uint64_t>>();
    report.counters.residual_searches = c.at("residual_searches").get<std::uint64_t>();
    report.counters.verified_candidates = c.at("verified_candidates").get<std::uint64_t>();
    report.counters.duplicates_removed = c.at("duplicates_removed").get<std::uint64_t>();
    for (const auto& x : doc.at("dmcs")) {
      auto values = x.get<std::vector<Capacity>>();
      if (values.size() != report.parameters.m) throw ParseError(0, "d-MC vector length does not match m");
      report.dmcs.emplace_back(std::move(values));
    }
    return report;
  } catch (const ordered_json::exception& e) {
    throw ParseError(0, std::string("malformed report: ") + e.what());
  }
}

}  // namespace dmc
