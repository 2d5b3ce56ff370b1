#pragma once

#include <string>
#include <vector>

#include "oddgraph/report.hpp"

namespace oddgraph {

/// Every structural check for one k: class census, arc and modular
/// factorizations, the 2-factor and its lists, and for k >= 3 the spanning
/// tree and both Hamilton cycles.
std::vector<CheckReport> run_verification_suite(int k, unsigned threads = 1);

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

std::vector<StageTiming> run_benchmark(int k, unsigned threads = 1);

}  // namespace oddgraph
