#include <random>
#include <sstream>

#include "doctest.h"
#include "treecrit/graph.hpp"

using namespace treecrit;

namespace {

Graph p4() { return build_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
Graph star4() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

}  // namespace

TEST_CASE("build_graph") {
  Graph g = p4();
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));

  CHECK(build_graph(1, {}).order() == 1);
  CHECK(build_graph(0, {}).order() == 0);

  SUBCASE("duplicate edges collapse") {
    Graph d = build_graph(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    CHECK(d.edge_count() == 2);
  }
  SUBCASE("self-loop is rejected with the edge") {
    CHECK_THROWS_WITH_AS(build_graph(3, {{0, 0}}), doctest::Contains("(0,0)"),
                         InputError);
  }
  SUBCASE("endpoint out of range") {
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), InputError);
  }
}

TEST_CASE("degree") {
  CHECK(degree(p4(), 0) == 1);
  CHECK(degree(p4(), 1) == 2);
  CHECK(degree(star4(), 0) == 3);
  CHECK_THROWS_AS(degree(p4(), 4), InputError);
}

TEST_CASE("distance") {
  CHECK(distance(p4(), 0, 3) == 3);
  CHECK(distance(p4(), 2, 2) == 0);
  Graph two = build_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(distance(two, 0, 3).has_value());
  CHECK_THROWS_AS(distance(p4(), 0, 9), InputError);
}

TEST_CASE("connected_components") {
  CHECK(connected_components(p4()) == std::vector<VertexSet>{{0, 1, 2, 3}});
  CHECK(connected_components(build_graph(3, {})) ==
        std::vector<VertexSet>{{0}, {1}, {2}});
  auto sub = induced_subgraph(p4(), {0, 2, 3});
  std::vector<VertexSet> lifted;
  for (const auto& c : connected_components(sub.graph))
    lifted.push_back(sub.lift(c));
  CHECK(lifted == std::vector<VertexSet>{{0}, {2, 3}});
}

TEST_CASE("induced_subgraph") {
  auto p3 = induced_subgraph(p4(), {0, 1, 2});
  CHECK(p3.graph == build_graph(3, {{0, 1}, {1, 2}}));
  CHECK(p3.original == std::vector<Vertex>{0, 1, 2});

  auto ends = induced_subgraph(p4(), {0, 3});
  CHECK(ends.graph.order() == 2);
  CHECK(ends.graph.edge_count() == 0);
  CHECK(ends.original == std::vector<Vertex>{0, 3});

  CHECK_THROWS_AS(induced_subgraph(p4(), {0, 7}), InputError);
}

TEST_CASE("certify_tree") {
  TreeCert t = certify_tree(p4());
  CHECK(t.leaves() == VertexSet{0, 3});
  CHECK(t.supports() == VertexSet{1, 2});
  CHECK(t.support_of(3) == 2);
  CHECK(t.dist(0, 3) == 3);

  TreeCert s = certify_tree(star4());
  CHECK(s.leaves() == VertexSet{1, 2, 3});
  CHECK(s.supports() == VertexSet{0});

  Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_THROWS_WITH_AS(certify_tree(c4), doctest::Contains("4 edges"),
                       NotATreeError);
  CHECK_THROWS_AS(certify_tree(build_graph(4, {{0, 1}, {2, 3}})),
                  NotATreeError);
  CHECK_THROWS_AS(certify_tree(build_graph(0, {})), NotATreeError);
}

TEST_CASE("graph invariants on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    Graph g = random_graph(rng, n, 0.3);

    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());

    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : g.neighbors(u)) CHECK(g.adjacent(v, u));

    std::vector<std::vector<Distance>> d;
    for (Vertex u = 0; u < n; ++u) d.push_back(distances_from(g, u));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        CHECK(d[u][v] == d[v][u]);
        for (Vertex w = 0; w < n; ++w)
          if (d[u][v] && d[v][w]) CHECK(*d[u][w] <= *d[u][v] + *d[v][w]);
      }

    auto same = induced_subgraph(g, VertexSet::range(n));
    CHECK(same.graph == g);

    auto comps = connected_components(g);
    std::size_t covered = 0;
    for (const auto& c : comps) covered += c.size();
    CHECK(covered == static_cast<std::size_t>(n));
    bool tree_shape = comps.size() == 1 &&
                      g.edge_count() == static_cast<std::size_t>(n - 1);
    CHECK(is_tree(g) == tree_shape);
  }
}

TEST_CASE("edge list format") {
  const std::string text =
      "# a comment\n"
      "4\n"
      "2 3\n"
      "  1 0\n"
      "\n"
      "# another\n"
      "1 2\n";
  auto doc = parse_edge_list(text);
  CHECK(doc.graph == p4());
  CHECK(doc.comments == std::vector<std::string>{"a comment", "another"});
  CHECK(to_edge_list(doc.graph) == "4\n0 1\n1 2\n2 3\n");
  CHECK(parse_edge_list(to_edge_list(doc.graph)).graph == doc.graph);

  CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("# only comments\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 5\n"), InputError);
  CHECK_THROWS_AS(parse_edge_list("2 2\n"), InputError);
}

TEST_CASE("dot output") {
  std::ostringstream out;
  write_dot(out, build_graph(2, {{0, 1}}));
  CHECK(out.str() == "graph {\n  0;\n  1;\n  0 -- 1;\n}\n");
}
