#include <stdexcept>

#include "doctest.h"
#include "treecrit/checks.hpp"
#include "treecrit/counting.hpp"
#include "treecrit/errors.hpp"

using namespace treecrit;

TEST_CASE("nearest_integer") {
  CHECK(nearest_integer(9, 12) == 1);   // 0.75
  CHECK(nearest_integer(4, 12) == 0);   // 0.33
  CHECK(nearest_integer(49, 12) == 4);  // 4.08
  CHECK(nearest_integer(0, 5) == 0);
  CHECK_THROWS_AS(nearest_integer(6, 12), std::domain_error);
  CHECK_THROWS_AS(nearest_integer(1, 0), std::domain_error);
}

TEST_CASE("p2") {
  CHECK(p2(4) == 2);
  CHECK(p2(3) == 1);
  CHECK(p2(2) == 1);
  CHECK(p2(1) == 0);
}

TEST_CASE("p3") {
  CHECK(p3(6) == 3);
  CHECK(p3(3) == 1);
  CHECK(p3(2) == 0);
  CHECK(p3(0) == 0);
}

TEST_CASE("partition formulas agree with direct enumeration, k <= 200") {
  for (Count k = 0; k <= 200; ++k) {
    CHECK(p2(k) == checks::partitions_into_two(k));
    CHECK(p3(k) == checks::partitions_into_three(k));
  }
}

TEST_CASE("the nearest-integer argument is never a half-integer") {
  // Squares mod 12 are 0, 1, 4 or 9, never 6.
  for (Count x = 0; x < 500; ++x) {
    Count r = (x * x) % 12;
    CHECK((r == 0 || r == 1 || r == 4 || r == 9));
  }
}

TEST_CASE("floor-sum identity used by the (-2)-critical count") {
  for (Count p = 2; p <= 100; ++p) {
    Count sum = 0;
    for (Count i = 0; i <= p - 2; ++i) sum += i / 2;
    Count k = p / 2;
    Count expected = p % 2 == 0 ? (k - 1) * (k - 1) : (k - 1) * k;
    CHECK(sum == expected);
  }
}

TEST_CASE("count_minus2_critical_formula") {
  CHECK(count_minus2_critical_formula(5) == 1);
  CHECK(count_minus2_critical_formula(6) == 1);
  CHECK(count_minus2_critical_formula(7) == 2);
  CHECK(count_minus2_critical_formula(8) == 3);
  CHECK_THROWS_AS(count_minus2_critical_formula(4), InputError);
}

TEST_CASE("count_3minimal_formula") {
  CHECK(count_3minimal_formula(4) == 1);
  CHECK(count_3minimal_formula(5) == 1);
  CHECK(count_3minimal_formula(6) == 2);
  CHECK(count_3minimal_formula(7) == 3);
  CHECK_THROWS_AS(count_3minimal_formula(3), InputError);
}

TEST_CASE("verify_formula") {
  auto single = verify_formula(5, CountedFamily::Minus2Critical);
  REQUIRE(single.rows.size() == 1);
  CHECK(single.rows[0].n == 5);
  CHECK(single.rows[0].formula == 1);
  CHECK(single.rows[0].enumerated == 1);
  CHECK(single.rows[0].agree());

  auto minus2 = verify_formula(10, CountedFamily::Minus2Critical);
  CHECK(minus2.all_agree());
  CHECK(minus2.rows[3].enumerated == 3);  // n = 8

  auto three = verify_formula(10, CountedFamily::ThreeMinimal, 2);
  CHECK(three.all_agree());
  CHECK(three.rows.front().n == 4);
  CHECK(three.rows[3].enumerated == 3);  // n = 7

  CHECK_THROWS_AS(verify_formula(19, CountedFamily::ThreeMinimal),
                  GuardExceeded);
  CHECK(parse_counted_family("critical2") == CountedFamily::Minus2Critical);
  CHECK_THROWS_AS(parse_counted_family("critical3"), InputError);
}
