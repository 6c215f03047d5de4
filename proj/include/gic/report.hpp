#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gic {

/// Outcome of one verification check (or a batch of instances of the same
/// check). `worst_gap` is the most adverse signed slack encountered:
/// inequality checks record how much slack the inequality held by (negative
/// means violated), identity checks record -|residual|. A report passes iff
/// worst_gap >= -tolerance.
struct VerificationReport {
  std::string lemma_id;
  int instances_run = 0;
  double worst_gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  nlohmann::ordered_json diagnostics = nlohmann::ordered_json::array();

  void finalize() { pass = worst_gap >= -tolerance; }
};

VerificationReport merge_reports(const std::string& lemma_id,
                                 const std::vector<VerificationReport>& parts);

nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace gic
