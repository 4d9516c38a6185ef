#pragma once

#include <string>
#include <vector>

#include "treecrit/graph.hpp"

namespace treecrit {

struct ConditionVerdict {
  int index = 0;  // 1-based condition number
  bool holds = true;
  VertexSet witness;  // violating vertex, pair or set when !holds
  std::string detail;
};

/// Verdicts for every condition of a characterization; all conditions are
/// evaluated even after one fails.
struct ConditionReport {
  std::vector<ConditionVerdict> conditions;

  bool overall() const {
    for (const auto& c : conditions)
      if (!c.holds) return false;
    return true;
  }
  const ConditionVerdict& condition(int index) const {
    return conditions.at(static_cast<std::size_t>(index - 1));
  }
};

}  // namespace treecrit
