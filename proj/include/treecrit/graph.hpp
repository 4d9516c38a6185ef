#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treecrit/errors.hpp"

namespace treecrit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Shortest-path length in edges; empty when the endpoints lie in different
/// components.
using Distance = std::optional<int>;

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(int n);

  bool contains(Vertex v) const;
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<Vertex>& ids() const { return ids_; }

  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

std::string to_string(const VertexSet& s);
std::ostream& operator<<(std::ostream& os, const VertexSet& s);

/// Immutable undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend Graph build_graph(int n, std::span<const Edge> edges);
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Duplicate edges collapse; self-loops and out-of-range endpoints throw
/// InputError naming the offending edge.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int degree(const Graph& g, Vertex v);
Distance distance(const Graph& g, Vertex u, Vertex v);

/// BFS distances from one source; unreachable vertices stay empty.
std::vector<Distance> distances_from(const Graph& g, Vertex source);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> id in the host graph

  VertexSet lift(const VertexSet& local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop);

/// A graph validated as a tree, with leaves, supports and an all-pairs
/// distance table.
class TreeCert {
 public:
  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  const VertexSet& leaves() const { return leaves_; }
  const VertexSet& supports() const { return supports_; }

  bool is_leaf(Vertex v) const { return graph_.degree(v) == 1; }
  int degree(Vertex v) const { return graph_.degree(v); }
  int dist(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * graph_.order() + v];
  }

  /// The unique neighbor of a leaf (written x+).
  Vertex support_of(Vertex leaf) const;
  /// Leaf neighbors of v.
  VertexSet leaf_neighbors(Vertex v) const;

  friend TreeCert certify_tree(Graph g);

 private:
  explicit TreeCert(Graph g);

  Graph graph_;
  VertexSet leaves_;
  VertexSet supports_;
  std::vector<int> dist_;
};

/// Throws NotATreeError when g is disconnected or |E| != n-1.
TreeCert certify_tree(Graph g);
bool is_tree(const Graph& g);

// Edge-list text format: first non-comment line is n, then one "u v" pair per
// line. Lines starting with '#' are comments.

struct EdgeListDocument {
  Graph graph;
  std::vector<std::string> comments;  // comment lines without the leading '#'
};

EdgeListDocument parse_edge_list(std::istream& in);
EdgeListDocument parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);
void write_dot(std::ostream& out, const Graph& g,
               std::span<const std::string> labels = {});

}  // namespace treecrit
