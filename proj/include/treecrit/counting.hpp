#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace treecrit {

using Count = std::int64_t;

/// Nearest integer to num/den (den > 0, num >= 0), computed exactly. Throws
/// std::domain_error when num/den is a half-integer.
Count nearest_integer(Count num, Count den);

/// Partitions of k into exactly two positive parts: floor(k/2).
Count p2(Count k);

/// Partitions of k into exactly three positive parts:
/// [(k+3)^2/12] - floor(k/2) - 1.
Count p3(Count k);

/// Nonisomorphic (-2)-critical trees on n >= 5 vertices.
Count count_minus2_critical_formula(int n);

/// Nonisomorphic 3-minimal trees on n >= 4 vertices.
Count count_3minimal_formula(int n);

enum class CountedFamily { Minus2Critical, ThreeMinimal };

CountedFamily parse_counted_family(const std::string& name);
std::string to_string(CountedFamily which);
int first_counted_n(CountedFamily which);
Count formula_value(CountedFamily which, int n);

struct CountRow {
  int n = 0;
  Count formula = 0;
  Count enumerated = 0;
  bool agree() const { return formula == enumerated; }
};

struct CountTable {
  CountedFamily which = CountedFamily::Minus2Critical;
  std::vector<CountRow> rows;

  bool all_agree() const;
};

/// Formula against enumeration for every n from the family's first size up
/// to n_max. The 3-minimal predicate goes through the characterization.
CountTable verify_formula(int n_max, CountedFamily which, int jobs = 1);

}  // namespace treecrit
