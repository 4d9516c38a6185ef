#include "treecrit/minimality.hpp"

#include <algorithm>
#include <cstdint>

#include "treecrit/primality.hpp"

namespace treecrit {

namespace {

void require_subset(const TreeCert& t, const VertexSet& x) {
  for (Vertex v : x)
    if (!t.graph().has_vertex(v))
      throw InputError("vertex set " + to_string(x) + " is out of range");
}

}  // namespace

bool is_minimal_bruteforce(const TreeCert& t, const VertexSet& x, int guard) {
  if (!tree_is_prime(t)) throw NotPrimeError("tree is not prime");
  require_subset(t, x);
  if (t.order() > guard)
    throw GuardExceeded("brute-force minimality", t.order(), guard);

  std::vector<Vertex> free;
  for (Vertex v = 0; v < t.order(); ++v)
    if (!x.contains(v)) free.push_back(v);
  const std::uint32_t full = (std::uint32_t{1} << free.size()) - 1;
  std::vector<char> keep(static_cast<std::size_t>(t.order()), 0);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::fill(keep.begin(), keep.end(), 0);
    for (Vertex v : x) keep[v] = 1;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1) keep[free[i]] = 1;
    if (induced_tree_is_prime(t, keep)) return false;
  }
  return true;
}

ConditionReport check_minimal_characterization(const TreeCert& t,
                                               const VertexSet& x) {
  if (t.order() < 5)
    throw InputError("the minimal-tree characterization needs n >= 5");
  if (x.empty()) throw InputError("X must be nonempty");
  require_subset(t, x);

  const auto& leaves = t.leaves();
  ConditionReport report;

  ConditionVerdict c1{1, true, {}, ""};
  for (std::size_t i = 0; i < leaves.size() && c1.holds; ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j)
      if (t.dist(leaves[i], leaves[j]) < 3) {
        c1 = {1, false, VertexSet{leaves[i], leaves[j]},
              "leaves at distance " +
                  std::to_string(t.dist(leaves[i], leaves[j]))};
        break;
      }
  report.conditions.push_back(c1);

  ConditionVerdict c2{2, true, {}, ""};
  for (Vertex leaf : leaves)
    if (!x.contains(leaf) && !x.contains(t.support_of(leaf))) {
      c2 = {2, false, VertexSet{leaf}, "neither the leaf nor its support in X"};
      break;
    }
  report.conditions.push_back(c2);

  ConditionVerdict c3{3, true, {}, ""};
  for (Vertex xi : x) {
    VertexSet own_leaves = t.leaf_neighbors(xi);
    if (own_leaves.empty() || t.is_leaf(xi)) continue;
    bool leaf_in_x = std::any_of(own_leaves.begin(), own_leaves.end(),
                                 [&](Vertex l) { return x.contains(l); });
    if (leaf_in_x) continue;
    if (t.degree(xi) != 2) {
      c3 = {3, false, VertexSet{xi}, "support in X with degree " +
                                         std::to_string(t.degree(xi))};
      break;
    }
    bool partner = std::any_of(x.begin(), x.end(), [&](Vertex xj) {
      return xj != xi && t.is_leaf(xj) && t.dist(xi, xj) == 2;
    });
    if (!partner) {
      c3 = {3, false, VertexSet{xi}, "no leaf of X at distance 2"};
      break;
    }
  }
  report.conditions.push_back(c3);
  return report;
}

bool is_minimal(const TreeCert& t, const VertexSet& x) {
  if (!tree_is_prime(t)) return false;
  if (t.order() == 4) return is_minimal_bruteforce(t, x);
  if (x.empty()) return false;
  return check_minimal_characterization(t, x).overall();
}

bool is_k_minimal(const TreeCert& t, int k, MinimalityRoute route) {
  const int n = t.order();
  if (k < 1 || k > n || !tree_is_prime(t)) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet x(idx);
    bool hit = route == MinimalityRoute::BruteForce ? is_minimal_bruteforce(t, x)
                                                    : is_minimal(t, x);
    if (hit) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

MinimalSubtree extract_minimal_subtree(const TreeCert& h, const VertexSet& x) {
  if (!tree_is_prime(h)) throw NotPrimeError("host tree is not prime");
  require_subset(h, x);
  const int n = h.order();
  std::vector<char> keep(static_cast<std::size_t>(n), 1);

  // A non-minimal prime subtree always has a prime subtree one or two
  // vertices smaller that still contains X, so single and pair deletions
  // reach a minimal one.
  auto try_single = [&] {
    for (Vertex v = 0; v < n; ++v) {
      if (!keep[v] || x.contains(v)) continue;
      keep[v] = 0;
      if (induced_tree_is_prime(h, keep)) return true;
      keep[v] = 1;
    }
    return false;
  };
  auto try_pair = [&] {
    for (Vertex u = 0; u < n; ++u) {
      if (!keep[u] || x.contains(u)) continue;
      keep[u] = 0;
      for (Vertex v = u + 1; v < n; ++v) {
        if (!keep[v] || x.contains(v)) continue;
        keep[v] = 0;
        if (induced_tree_is_prime(h, keep)) return true;
        keep[v] = 1;
      }
      keep[u] = 1;
    }
    return false;
  };
  while (try_single() || try_pair()) {
  }

  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v)
    if (keep[v]) kept.push_back(v);
  auto sub = induced_subgraph(h.graph(), VertexSet(kept));
  std::vector<Vertex> local;
  for (Vertex v : x)
    local.push_back(static_cast<Vertex>(
        std::lower_bound(kept.begin(), kept.end(), v) - kept.begin()));
  return {certify_tree(std::move(sub.graph)), std::move(sub.original),
          VertexSet(std::move(local))};
}

int ThreeMinimalClass::number() const {
  switch (form) {
    case ThreeMinimalForm::P4: return 1;
    case ThreeMinimalForm::Path: return 2;
    case ThreeMinimalForm::Spider: return 3;
    case ThreeMinimalForm::SpiderA1B1Cn: return 4;
    case ThreeMinimalForm::SpiderA1B1C1: return 5;
    default: return 0;
  }
}

std::string ThreeMinimalClass::to_string() const {
  auto with_params = [&](std::string name) {
    name += "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) name += ",";
      name += std::to_string(params[i]);
    }
    return name + ")";
  };
  switch (form) {
    case ThreeMinimalForm::P4: return "P4";
    case ThreeMinimalForm::Path: return with_params("P");
    case ThreeMinimalForm::Spider: return with_params("S") + " X=leaves";
    case ThreeMinimalForm::SpiderA1B1Cn: return with_params("S") + " X={a1,b1,cn}";
    case ThreeMinimalForm::SpiderA1B1C1: return with_params("S") + " X={a1,b1,c1}";
    case ThreeMinimalForm::NotMinimal: return "NotMinimal";
    case ThreeMinimalForm::Unmatched: return "Unmatched";
  }
  return "Unmatched";
}

namespace {

// Legs of a tree with exactly one vertex of degree 3, each listed from the
// center outwards.
std::vector<std::vector<Vertex>> spider_legs(const TreeCert& t, Vertex center) {
  std::vector<std::vector<Vertex>> legs;
  for (Vertex first : t.graph().neighbors(center)) {
    std::vector<Vertex> leg{first};
    Vertex prev = center;
    while (t.degree(leg.back()) == 2) {
      auto nbrs = t.graph().neighbors(leg.back());
      Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = leg.back();
      leg.push_back(next);
    }
    legs.push_back(std::move(leg));
  }
  return legs;
}

}  // namespace

ThreeMinimalClass classify_3_minimal(const TreeCert& t, const VertexSet& x) {
  if (x.size() != 3) throw InputError("classification needs |X| = 3");
  require_subset(t, x);
  if (!is_minimal(t, x)) return {ThreeMinimalForm::NotMinimal, {}};
  const int n = t.order();
  if (n == 4) return {ThreeMinimalForm::P4, {}};

  const auto& leaves = t.leaves();
  if (leaves.size() == 2) {
    if (leaves.is_subset_of(x)) return {ThreeMinimalForm::Path, {n}};
    return {ThreeMinimalForm::Unmatched, {}};
  }
  if (leaves.size() != 3) return {ThreeMinimalForm::Unmatched, {}};

  Vertex center = -1;
  for (Vertex v = 0; v < n; ++v)
    if (t.degree(v) == 3) center = v;
  if (center < 0) return {ThreeMinimalForm::Unmatched, {}};
  auto legs = spider_legs(t, center);
  std::sort(legs.begin(), legs.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  std::vector<int> lengths;
  for (const auto& leg : legs) lengths.push_back(static_cast<int>(leg.size()));

  if (x == leaves) return {ThreeMinimalForm::Spider, lengths};

  std::vector<int> order{0, 1, 2};
  do {
    const auto& a = legs[order[0]];
    const auto& b = legs[order[1]];
    const auto& c = legs[order[2]];
    if (a.size() != 1 || b.size() != 2) continue;
    if (x == VertexSet{a[0], b[0], c.back()})
      return {ThreeMinimalForm::SpiderA1B1Cn, lengths};
    if (c.size() == 2 && x == VertexSet{a[0], b[0], c[0]})
      return {ThreeMinimalForm::SpiderA1B1C1, lengths};
  } while (std::next_permutation(order.begin(), order.end()));
  return {ThreeMinimalForm::Unmatched, lengths};
}

}  // namespace treecrit
