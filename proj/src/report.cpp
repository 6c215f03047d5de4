#include "gic/report.hpp"

#include <algorithm>
#include <limits>

namespace gic {

VerificationReport merge_reports(const std::string& lemma_id,
                                 const std::vector<VerificationReport>& parts) {
  VerificationReport out;
  out.lemma_id = lemma_id;
  out.worst_gap = std::numeric_limits<double>::infinity();
  out.tolerance = 0.0;
  for (const auto& p : parts) {
    out.instances_run += p.instances_run;
    out.worst_gap = std::min(out.worst_gap, p.worst_gap);
    out.tolerance = std::max(out.tolerance, p.tolerance);
    for (const auto& d : p.diagnostics) out.diagnostics.push_back(d);
  }
  if (parts.empty()) out.worst_gap = 0.0;
  out.pass = std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.pass; });
  return out;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["lemma_id"] = report.lemma_id;
  j["instances_run"] = report.instances_run;
  j["worst_gap"] = report.worst_gap;
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  j["diagnostics"] = report.diagnostics;
  return j;
}

}  // namespace gic
