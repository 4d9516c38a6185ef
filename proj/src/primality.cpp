#include "treecrit/primality.hpp"

#include <cstdint>

namespace treecrit {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> masks(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) masks[v] |= Mask{1} << w;
  return masks;
}

bool mask_is_module(const std::vector<Mask>& adj, Mask m) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (m >> v & 1) continue;
    Mask seen = adj[v] & m;
    if (seen != 0 && seen != m) return false;
  }
  return true;
}

VertexSet mask_to_set(Mask m) {
  std::vector<Vertex> ids;
  for (Vertex v = 0; m; ++v, m >>= 1)
    if (m & 1) ids.push_back(v);
  return VertexSet(std::move(ids));
}

// Visits every nontrivial subset, by size and then lexicographically, until
// the visitor returns true.
template <typename Visit>
void scan_nontrivial_subsets(int n, Visit&& visit) {
  std::vector<int> idx;
  for (int size = 2; size < n; ++size) {
    idx.resize(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      Mask m = 0;
      for (int i : idx) m |= Mask{1} << i;
      if (visit(m)) return;
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

void check_guard(const Graph& g, int guard) {
  if (guard > 31) guard = 31;
  if (g.order() > guard)
    throw GuardExceeded("too large for brute-force module search", g.order(),
                        guard);
}

}  // namespace

bool is_module(const Graph& g, const VertexSet& m) {
  for (Vertex v : m)
    if (!g.has_vertex(v))
      throw InputError("vertex set " + to_string(m) +
                       " is not a subset of the graph's vertices");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (m.contains(v)) continue;
    std::size_t hits = 0;
    for (Vertex w : g.neighbors(v))
      if (m.contains(w)) ++hits;
    if (hits != 0 && hits != m.size()) return false;
  }
  return true;
}

std::optional<ModuleWitness> find_nontrivial_module(const Graph& g,
                                                    int guard) {
  check_guard(g, guard);
  auto adj = adjacency_masks(g);
  std::optional<ModuleWitness> found;
  scan_nontrivial_subsets(g.order(), [&](Mask m) {
    if (!mask_is_module(adj, m)) return false;
    found = ModuleWitness{mask_to_set(m)};
    return true;
  });
  return found;
}

std::vector<ModuleWitness> all_nontrivial_modules(const Graph& g, int guard) {
  check_guard(g, guard);
  auto adj = adjacency_masks(g);
  std::vector<ModuleWitness> out;
  scan_nontrivial_subsets(g.order(), [&](Mask m) {
    if (mask_is_module(adj, m)) out.push_back({mask_to_set(m)});
    return false;
  });
  return out;
}

bool is_indecomposable(const Graph& g, int guard) {
  return !find_nontrivial_module(g, guard).has_value();
}

bool is_prime(const Graph& g, int guard) {
  if (g.order() < 4) return false;
  return is_indecomposable(g, guard);
}

bool is_prime(const TreeCert& t) { return tree_is_prime(t); }

bool tree_is_prime(const TreeCert& t) {
  if (t.order() < 4) return false;
  const auto& leaves = t.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j)
      if (t.dist(leaves[i], leaves[j]) < 3) return false;
  return true;
}

std::optional<ModuleWitness> tree_nontrivial_modules_witness(
    const TreeCert& t) {
  // Two leaves share a support exactly when they are at distance 2.
  const auto& leaves = t.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j)
      if (t.dist(leaves[i], leaves[j]) == 2)
        return ModuleWitness{VertexSet{leaves[i], leaves[j]}};
  return std::nullopt;
}

bool induced_tree_is_prime(const TreeCert& t, const std::vector<char>& keep) {
  const Graph& g = t.graph();
  const int n = g.order();
  int size = 0;
  int edges2 = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    ++size;
    for (Vertex w : g.neighbors(v)) edges2 += keep[w] ? 1 : 0;
  }
  // An induced subgraph of a tree is a forest; it is connected iff it has
  // size-1 edges.
  if (size < 4 || edges2 != 2 * (size - 1)) return false;
  std::vector<char> support_used(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    Vertex only = -1;
    int deg = 0;
    for (Vertex w : g.neighbors(v))
      if (keep[w]) {
        ++deg;
        only = w;
      }
    if (deg != 1) continue;
    if (support_used[only]) return false;
    support_used[only] = 1;
  }
  return true;
}

}  // namespace treecrit
