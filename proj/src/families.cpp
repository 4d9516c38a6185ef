#include "treecrit/families.hpp"

#include <algorithm>
#include <map>

namespace treecrit {

namespace {

// Renumbers integer labels in ascending order to 0..n-1.
FamilyTree from_labels(std::string family, std::vector<int> params,
                       const std::vector<int>& label_set,
                       const std::vector<std::pair<int, int>>& label_edges) {
  std::map<int, Vertex> id;
  for (int l : label_set) id.emplace(l, static_cast<Vertex>(id.size()));
  std::vector<Edge> edges;
  for (auto [a, b] : label_edges) edges.emplace_back(id.at(a), id.at(b));
  std::vector<std::string> labels;
  for (int l : label_set) labels.push_back(std::to_string(l));
  return FamilyTree{std::move(family), std::move(params),
                    certify_tree(build_graph(static_cast<int>(id.size()),
                                             edges)),
                    std::move(labels)};
}

std::vector<int> labels_between(int lo, int hi) {
  std::vector<int> out;
  for (int l = lo; l <= hi; ++l) out.push_back(l);
  return out;
}

// E(T_shift(P_k)): the path on shift+1..shift+k.
void add_shifted_path(std::vector<std::pair<int, int>>& edges, int k,
                      int shift) {
  for (int p = 1; p < k; ++p) edges.emplace_back(p + shift, p + 1 + shift);
}

}  // namespace

Vertex FamilyTree::id_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end())
    throw InputError("unknown vertex label '" + label + "' in " + name());
  return static_cast<Vertex>(it - labels.begin());
}

VertexSet FamilyTree::ids_of(const std::vector<std::string>& ls) const {
  std::vector<Vertex> out;
  for (const auto& l : ls) out.push_back(id_of(l));
  return VertexSet(std::move(out));
}

std::string FamilyTree::name() const {
  std::string out = family + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

FamilyTree path(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  add_shifted_path(edges, n, 0);
  return from_labels("Path", {n}, labels_between(1, n), edges);
}

FamilyTree spider_a(int m) {
  if (m < 2) throw InputError("A_{2m+1} needs m >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i + m);
  }
  return from_labels("A", {m}, labels_between(0, 2 * m), edges);
}

FamilyTree p_kt(int k, int t) {
  if (k < 4 || t < 1) throw InputError("P_{k,t} needs k >= 4 and t >= 1");
  std::vector<std::pair<int, int>> edges;
  add_shifted_path(edges, k, 2 * t);
  for (int i = 1; i <= t; ++i) {
    edges.emplace_back(2 * i - 1, 2 * i);
    edges.emplace_back(2 * t + 2, 2 * i);
  }
  return from_labels("Pkt", {k, t}, labels_between(1, 2 * t + k), edges);
}

FamilyTree p_mn1n2(int m, int n1, int n2) {
  if (m < 4 || n1 < 1 || n2 < 1)
    throw InputError("P_{m,n1,n2} needs m >= 4, n1 >= 1 and n2 >= 1");
  const int s = n1 + n2;
  std::vector<std::pair<int, int>> edges;
  add_shifted_path(edges, m, 2 * s);
  for (int i = 1; i <= s; ++i) edges.emplace_back(2 * i - 1, 2 * i);
  for (int i = 1; i <= n1; ++i) edges.emplace_back(2 * s + 2, 2 * i);
  for (int j = n1 + 1; j <= s; ++j) edges.emplace_back(2 * s + m - 1, 2 * j);
  return from_labels("Pmn", {m, n1, n2}, labels_between(1, 2 * s + m), edges);
}

FamilyTree s_kmn(int k, int m, int n) {
  if (k < 1 || k > m || m > n)
    throw InputError("S_{k,m,n} needs 1 <= k <= m <= n");
  std::vector<std::string> labels{"r"};
  std::vector<Edge> edges;
  auto add_leg = [&](char name, int length) {
    Vertex prev = 0;
    for (int i = 1; i <= length; ++i) {
      auto v = static_cast<Vertex>(labels.size());
      labels.push_back(name + std::to_string(i));
      edges.emplace_back(prev, v);
      prev = v;
    }
  };
  add_leg('a', k);
  add_leg('b', m);
  add_leg('c', n);
  return FamilyTree{
      "S", {k, m, n},
      certify_tree(build_graph(static_cast<int>(labels.size()), edges)),
      std::move(labels)};
}

}  // namespace treecrit
