// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "treecrit/checks.hpp"
#include "treecrit/counting.hpp"

using namespace treecrit;
using checks::CheckResult;

namespace {

int jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

struct Verdict {
  bool passed = true;
  std::string detail;
};

void merge(Verdict& v, const CheckResult& r) {
  if (!r.passed) v.passed = false;
  if (!v.detail.empty()) v.detail += "; ";
  v.detail += r.name + ": " + (r.passed ? r.detail : "FAILED " + r.detail);
}

Verdict count_criterion(CountedFamily which, int n_max, double budget,
                        std::vector<std::pair<int, Count>> spots) {
  Verdict v;
  auto start = std::chrono::steady_clock::now();
  CountTable table = verify_formula(n_max, which, jobs());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  std::ostringstream d;
  for (const auto& row : table.rows) {
    if (!row.agree()) {
      v.passed = false;
      d << "n=" << row.n << " formula=" << row.formula
        << " enumerated=" << row.enumerated << "; ";
    }
  }
  for (auto [n, want] : spots) {
    Count got = -1;
    for (const auto& row : table.rows)
      if (row.n == n) got = row.enumerated;
    if (got != want || formula_value(which, n) != want) {
      v.passed = false;
      d << "spot n=" << n << " expected " << want << " got " << got << "; ";
    }
  }
  if (static_cast<int>(table.rows.size()) != n_max - first_counted_n(which) + 1) {
    v.passed = false;
    d << "missing rows; ";
  }
  if (secs > budget) {
    v.passed = false;
    d << "runtime " << secs << "s over budget " << budget << "s; ";
  }
  d << table.rows.size() << " rows in " << static_cast<int>(secs) << "s";
  v.detail = d.str();
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int index;
    std::string title;
    std::function<Verdict()> run;
  };

  std::vector<Criterion> criteria{
      {1, "(-2)-critical count formula matches enumeration, 5 <= n <= 14",
       [] {
         return count_criterion(CountedFamily::Minus2Critical, 14, 120.0,
                                {{5, 1}, {6, 1}, {7, 2}, {8, 3}});
       }},
      {2, "3-minimal count formula matches enumeration, 4 <= n <= 14",
       [] {
         return count_criterion(CountedFamily::ThreeMinimal, 14, 300.0,
                                {{4, 1}, {5, 1}, {6, 2}});
       }},
      {3, "critical characterization equivalence, prime trees 5 <= n <= 12",
       [] {
         Verdict v;
         merge(v, checks::critical_characterization_equivalence(5, 12));
         return v;
       }},
      {4, "minimal characterization equals definition, prime trees 5 <= n <= 9",
       [] {
         Verdict v;
         merge(v, checks::minimal_characterization_equivalence(5, 9));
         return v;
       }},
      {5, "uniqueness of the (-1), (-n/2) and (0) critical trees",
       [] {
         Verdict v;
         merge(v, checks::critical_uniqueness_claims(14, 13, 12));
         return v;
       }},
      {6, "oracle equivalences: primality, class counts, partitions",
       [] {
         Verdict v;
         merge(v, checks::tree_primality_oracle(9));
         merge(v, checks::class_count_oracle(9));
         merge(v, checks::partition_oracle(200));
         return v;
       }},
      {7, "leaf deletion leaves a unique module {y, x+}, prime trees n <= 10",
       [] {
         Verdict v;
         merge(v, checks::leaf_deletion_module_uniqueness(10));
         return v;
       }},
      {8, "extract_minimal_subtree on 200 random instances, n <= 9",
       [] {
         Verdict v;
         merge(v, checks::minimal_extraction(200, 9, 20240611u));
         return v;
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.passed = false;
      v.detail = std::string("exception: ") + e.what();
    }
    if (!v.passed) ++failures;
    std::printf("%s [%d] %s -- %s\n", v.passed ? "PASS" : "FAIL", c.index,
                c.title.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
