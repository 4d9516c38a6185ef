#include "treecrit/counting.hpp"

#include <stdexcept>

#include "treecrit/criticality.hpp"
#include "treecrit/enumeration.hpp"
#include "treecrit/errors.hpp"
#include "treecrit/minimality.hpp"
#include "treecrit/primality.hpp"

namespace treecrit {

Count nearest_integer(Count num, Count den) {
  if (den <= 0 || num < 0)
    throw std::domain_error("nearest_integer needs num >= 0 and den > 0");
  if ((2 * num) % (2 * den) == den)
    throw std::domain_error("nearest integer of a half-integer is ambiguous");
  return (2 * num + den) / (2 * den);
}

Count p2(Count k) {
  if (k < 0) throw std::domain_error("p2 needs k >= 0");
  return k / 2;
}

Count p3(Count k) {
  if (k < 0) throw std::domain_error("p3 needs k >= 0");
  return nearest_integer((k + 3) * (k + 3), 12) - k / 2 - 1;
}

Count count_minus2_critical_formula(int n) {
  if (n < 5) throw InputError("the (-2)-critical count needs n >= 5");
  const Count q = n / 4;
  switch (n % 4) {
    case 0: return q * q - 1;
    case 1: return q * q;
    case 2: return q * (q + 1) - 1;
    default: return q * (q + 1);
  }
}

Count count_3minimal_formula(int n) {
  if (n < 4) throw InputError("the 3-minimal count needs n >= 4");
  if (n <= 5) return 1;
  if (n == 6) return 2;
  const Count m = n;
  return nearest_integer((m - 1) * (m - 1), 12) - (m - 4) / 2 + (m - 2) / 2 - 1;
}

CountedFamily parse_counted_family(const std::string& name) {
  if (name == "critical2") return CountedFamily::Minus2Critical;
  if (name == "minimal3") return CountedFamily::ThreeMinimal;
  throw InputError("unknown count family '" + name +
                   "' (expected critical2 or minimal3)");
}

std::string to_string(CountedFamily which) {
  return which == CountedFamily::Minus2Critical ? "critical2" : "minimal3";
}

int first_counted_n(CountedFamily which) {
  return which == CountedFamily::Minus2Critical ? 5 : 4;
}

Count formula_value(CountedFamily which, int n) {
  return which == CountedFamily::Minus2Critical
             ? count_minus2_critical_formula(n)
             : count_3minimal_formula(n);
}

bool CountTable::all_agree() const {
  for (const auto& r : rows)
    if (!r.agree()) return false;
  return true;
}

CountTable verify_formula(int n_max, CountedFamily which, int jobs) {
  if (n_max > kFreeTreeGuard)
    throw GuardExceeded("formula verification", n_max, kFreeTreeGuard);
  TreePredicate pred;
  if (which == CountedFamily::Minus2Critical) {
    pred = [](const TreeCert& t) {
      return tree_is_prime(t) && sigma(t).k() == 2;
    };
  } else {
    pred = [](const TreeCert& t) { return is_k_minimal(t, 3); };
  }
  CountTable table{which, {}};
  for (int n = first_counted_n(which); n <= n_max; ++n)
    table.rows.push_back(
        {n, formula_value(which, n), count_by_predicate(n, pred, jobs)});
  return table;
}

}  // namespace treecrit
