#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "treecrit/counting.hpp"

namespace treecrit::checks {

/// Outcome of one exhaustive verification suite.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;   // counts examined, or the first counterexample
  double seconds = 0.0;
};

// Partition-count oracles by direct enumeration of a <= b (<= c).
Count partitions_into_two(Count k);
Count partitions_into_three(Count k);

CheckResult count_formula_agreement(CountedFamily which, int n_max,
                                    int jobs = 1);
CheckResult critical_characterization_equivalence(int n_min, int n_max);
CheckResult minimal_characterization_equivalence(int n_min, int n_max);
CheckResult critical_uniqueness_claims(int n_max_one, int n_max_half,
                                       int n_max_p4);
CheckResult tree_primality_oracle(int n_max);
CheckResult class_count_oracle(int n_max);
CheckResult partition_oracle(Count k_max);
CheckResult leaf_deletion_module_uniqueness(int n_max);
CheckResult minimal_extraction(int instances, int n_max, std::uint32_t seed);
CheckResult family_self_verification();
CheckResult family_distinctness(int n_max);
CheckResult canonical_relabel_invariance(int n_max, int relabels,
                                         std::uint32_t seed);

/// Every suite at its standard bounds, in a fixed order.
std::vector<std::function<CheckResult()>> standard_suites(int jobs = 1);

}  // namespace treecrit::checks
