#include "doctest.h"
#include "treecrit/criticality.hpp"
#include "treecrit/enumeration.hpp"
#include "treecrit/families.hpp"
#include "treecrit/minimality.hpp"

using namespace treecrit;

TEST_CASE("path") {
  auto p4 = path(4);
  CHECK(p4.tree.order() == 4);
  CHECK(tree_is_prime(p4.tree));
  CHECK(p4.labels == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK_FALSE(tree_is_prime(path(3).tree));
  CHECK(path(1).tree.order() == 1);
  CHECK_THROWS_AS(path(0), InputError);
}

TEST_CASE("spider_a") {
  CHECK(are_isomorphic(spider_a(2).tree, path(5).tree));
  auto a7 = spider_a(3);
  CHECK(a7.tree.order() == 7);
  CHECK(sigma(a7.tree).sigma == a7.ids_of({"4", "5", "6"}));
  CHECK(sigma(a7.tree).sigma == a7.tree.leaves());
  CHECK_THROWS_AS(spider_a(1), InputError);
}

TEST_CASE("p_kt") {
  auto p = p_kt(5, 1);
  CHECK(p.tree.order() == 7);
  CHECK(sigma(p.tree).sigma == p.ids_of({"3", "7"}));

  for (int t = 1; t <= 4; ++t) {
    auto q = p_kt(4, t);
    int n = 2 * t + 4;
    CHECK(sigma(q.tree).sigma == q.ids_of({std::to_string(n - 3)}));
  }
  CHECK_THROWS_AS(p_kt(3, 1), InputError);
  CHECK_THROWS_AS(p_kt(5, 0), InputError);

  SUBCASE("matches the edge set written out by hand") {
    // P_{4,1}: path 3-4-5-6, pendant 1-2 hung at 4; ids are labels - 1.
    TreeCert by_hand =
        certify_tree(build_graph(6, {{2, 3}, {3, 4}, {4, 5}, {0, 1}, {3, 1}}));
    CHECK(are_isomorphic(p_kt(4, 1).tree, by_hand));
    CHECK(p_kt(4, 1).tree.graph() == by_hand.graph());
  }
}

TEST_CASE("p_mn1n2") {
  auto p = p_mn1n2(4, 1, 1);
  CHECK(p.tree.order() == 8);
  CHECK(sigma(p.tree).sigma == p.ids_of({"5", "8"}));
  CHECK_THROWS_AS(p_mn1n2(3, 1, 1), InputError);
  CHECK_THROWS_AS(p_mn1n2(4, 0, 1), InputError);
}

TEST_CASE("s_kmn") {
  auto s = s_kmn(1, 2, 2);
  CHECK(s.tree.order() == 6);
  CHECK(is_minimal_bruteforce(s.tree, s.ids_of({"a1", "b1", "c1"})));
  CHECK(s.tree.dist(s.id_of("r"), s.id_of("c2")) == 2);

  auto s222 = s_kmn(2, 2, 2);
  CHECK(s222.tree.order() == 7);
  CHECK(is_minimal_bruteforce(s222.tree, s222.tree.leaves()));

  auto s113 = s_kmn(1, 1, 3);
  CHECK_FALSE(is_minimal(s113.tree, s113.tree.leaves()));

  CHECK_THROWS_AS(s_kmn(2, 1, 3), InputError);
  CHECK_THROWS_AS(s_kmn(0, 1, 1), InputError);
  CHECK_THROWS_AS(s.id_of("d1"), InputError);
}

TEST_CASE("constructor outputs are trees of the advertised size") {
  for (int m = 2; m <= 6; ++m) CHECK(spider_a(m).tree.order() == 2 * m + 1);
  for (int k = 4; k <= 8; ++k)
    for (int t = 1; t <= 3; ++t) CHECK(p_kt(k, t).tree.order() == 2 * t + k);
  for (int m = 4; m <= 7; ++m)
    for (int n1 = 1; n1 <= 3; ++n1)
      for (int n2 = n1; n2 <= 3; ++n2)
        CHECK(p_mn1n2(m, n1, n2).tree.order() == 2 * (n1 + n2) + m);
  CHECK(s_kmn(2, 3, 4).tree.order() == 10);
}
