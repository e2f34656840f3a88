#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxlink/parallel.hpp"

namespace coxlink::acceptance {

/// Quick runs every criterion at reduced sizes; Full runs them as specified.
enum class Level { Quick, Full };

struct CriterionResult {
  std::string id;    // "1".."11", or "2s"/"5s" for supplementary lines
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;  // seconds, 0 = none
};

std::vector<CriterionResult> run(Level level, std::uint64_t seed = 0, Execution ex = Execution::Parallel);

/// "PASS  1  chart-count  ... (0.01 s)"
std::string format(const CriterionResult& r);

}  // namespace coxlink::acceptance
