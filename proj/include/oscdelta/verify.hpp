#pragma once

#include <string>
#include <utility>
#include <vector>

namespace oscdelta {

inline constexpr int kCriterionCount = 11;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, double>> metrics;
  std::string note;
};

/// Run one acceptance criterion (1..11). Tolerances are pinned inside.
CriterionResult run_criterion(int id);

/// Run a selection (empty = all), in order.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids = {});

std::string format_criterion_line(const CriterionResult& r);

}  // namespace oscdelta
