#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oddgraph {

/// Outcome of one structural check: a pass flag, aggregate counts, and the
/// first counterexample found in scan order.
struct CheckReport {
  std::string name;
  bool passed = true;
  std::map<std::string, std::uint64_t> counts;
  std::string message;
  std::vector<std::uint64_t> counterexample;

  explicit CheckReport(std::string report_name = {}) : name(std::move(report_name)) {}

  // Only the first failure is kept.
  void fail(std::string why, std::vector<std::uint64_t> payload = {}) {
    if (!passed) return;
    passed = false;
    message = std::move(why);
    counterexample = std::move(payload);
    if (counterexample.empty()) counterexample.push_back(0);
  }
};

}  // namespace oddgraph
