#include "treecrit/criticality.hpp"

#include <map>
#include <stdexcept>

#include "treecrit/enumeration.hpp"
#include "treecrit/families.hpp"

namespace treecrit {

namespace {

void require_prime(const TreeCert& t) {
  if (!tree_is_prime(t))
    throw NotPrimeError("sigma is defined on prime graphs only");
}

std::vector<char> all_but(int n, Vertex x) {
  std::vector<char> keep(static_cast<std::size_t>(n), 1);
  keep[x] = 0;
  return keep;
}

}  // namespace

SigmaResult sigma(const TreeCert& t) {
  require_prime(t);
  // Deleting an internal vertex disconnects the tree, so only leaves can be
  // non-critical.
  std::vector<Vertex> out;
  for (Vertex x : t.leaves())
    if (induced_tree_is_prime(t, all_but(t.order(), x))) out.push_back(x);
  return {VertexSet(std::move(out))};
}

SigmaResult sigma(const Graph& g, int guard) {
  if (is_tree(g)) return sigma(certify_tree(g));
  return sigma_by_module_search(g, guard);
}

SigmaResult sigma_by_module_search(const Graph& g, int guard) {
  if (!is_prime(g, guard))
    throw NotPrimeError("sigma is defined on prime graphs only");
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.order(); ++x)
    if (is_prime(delete_vertices(g, VertexSet{x}).graph, guard))
      out.push_back(x);
  return {VertexSet(std::move(out))};
}

ConditionReport check_critical_characterization(const TreeCert& t,
                                                const VertexSet& x) {
  const int n = t.order();
  if (n < 5)
    throw InputError("the critical-tree characterization needs n >= 5");
  if (x.empty()) throw InputError("candidate set must be nonempty");
  for (Vertex v : x)
    if (!t.graph().has_vertex(v))
      throw InputError("candidate set " + to_string(x) + " is out of range");

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
  for (Vertex v : x)
    if (!t.is_leaf(v)) {
      c2 = {2, false, VertexSet{v}, "not a leaf"};
      break;
    }
  if (c2.holds && static_cast<int>(x.size()) > n / 2)
    c2 = {2, false, x,
          "|X| = " + std::to_string(x.size()) + " exceeds " +
              std::to_string(n / 2)};
  report.conditions.push_back(c2);

  ConditionVerdict c3{3, true, {}, ""};
  for (Vertex leaf : leaves) {
    if (x.contains(leaf)) continue;
    int at_three = 0;
    for (Vertex xi : x) at_three += t.dist(leaf, xi) == 3 ? 1 : 0;
    if (at_three != 1) {
      c3 = {3, false, VertexSet{leaf},
            std::to_string(at_three) + " members of X at distance 3"};
      break;
    }
    if (t.degree(t.support_of(leaf)) != 2) {
      c3 = {3, false, VertexSet{leaf}, "support degree is not 2"};
      break;
    }
  }
  report.conditions.push_back(c3);

  ConditionVerdict c4{4, true, {}, ""};
  for (Vertex xi : x) {
    if (!c4.holds) break;
    if (!t.is_leaf(xi) || t.degree(t.support_of(xi)) != 2) continue;
    for (Vertex leaf : leaves)
      if (leaf != xi && t.dist(xi, leaf) < 4) {
        c4 = {4, false, VertexSet{xi, leaf},
              "leaves at distance " + std::to_string(t.dist(xi, leaf))};
        break;
      }
  }
  report.conditions.push_back(c4);
  return report;
}

std::optional<ModuleWitness> unique_module_of_leaf_deletion(const TreeCert& t,
                                                            Vertex x) {
  if (!tree_is_prime(t)) throw NotPrimeError("tree is not prime");
  if (!t.graph().has_vertex(x) || !t.is_leaf(x))
    throw InputError("vertex " + std::to_string(x) + " is not a leaf");
  if (induced_tree_is_prime(t, all_but(t.order(), x))) return std::nullopt;

  auto rest = delete_vertices(t.graph(), VertexSet{x});
  TreeCert remainder = certify_tree(rest.graph);
  // Nontrivial modules of a decomposable tree are sets of >= 2 leaves with a
  // common support.
  std::map<Vertex, std::vector<Vertex>> by_support;
  for (Vertex leaf : remainder.leaves())
    by_support[remainder.support_of(leaf)].push_back(leaf);
  std::optional<ModuleWitness> found;
  for (const auto& [support, group] : by_support) {
    if (group.size() < 2) continue;
    if (group.size() > 2 || found)
      throw std::logic_error("T-x has more than one nontrivial module");
    found = ModuleWitness{rest.lift(VertexSet(group))};
  }
  if (!found || !found->members.contains(t.support_of(x)))
    throw std::logic_error("module of T-x does not contain the support of x");
  return found;
}

bool is_k_critical(const TreeCert& t, int k) { return sigma(t).k() == k; }

std::string CriticalFamilyTag::to_string() const {
  std::string name;
  switch (kind) {
    case Kind::Path: name = "Path"; break;
    case Kind::Pkt: name = "Pkt"; break;
    case Kind::Pmn: name = "Pmn"; break;
    case Kind::Spider: name = "Spider"; break;
    case Kind::Other: return "Other";
  }
  name += "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) name += ",";
    name += std::to_string(params[i]);
  }
  return name + ")";
}

namespace {

using Kind = CriticalFamilyTag::Kind;

std::optional<FamilyTree> build_member(const CriticalFamilyTag& tag) {
  try {
    switch (tag.kind) {
      case Kind::Path: return path(tag.params[0]);
      case Kind::Pkt: return p_kt(tag.params[0], tag.params[1]);
      case Kind::Pmn: return p_mn1n2(tag.params[0], tag.params[1], tag.params[2]);
      case Kind::Spider: return spider_a(tag.params[0]);
      case Kind::Other: return std::nullopt;
    }
  } catch (const InputError&) {
  }
  return std::nullopt;
}

CriticalFamilyTag confirmed(const TreeCert& t, CriticalFamilyTag tag) {
  auto member = build_member(tag);
  if (member && are_isomorphic(t, member->tree)) return tag;
  return {};
}

// Vertex following `from` on the path from `from` to `to`.
Vertex step_towards(const TreeCert& t, Vertex from, Vertex to) {
  for (Vertex w : t.graph().neighbors(from))
    if (t.dist(w, to) < t.dist(from, to)) return w;
  return from;
}

CriticalFamilyTag classify_two_critical(const TreeCert& t,
                                        const VertexSet& s) {
  const int n = t.order();
  if (t.leaves().size() == 2) return confirmed(t, {Kind::Path, {n}});
  const Vertex x1 = s[0];
  const Vertex x2 = s[1];
  const int backbone = t.dist(x1, x2) + 1;
  const Vertex near1 = step_towards(t, x1, x2);
  const Vertex near2 = step_towards(t, x2, x1);
  int at1 = 0;
  int at2 = 0;
  for (Vertex leaf : t.leaves()) {
    if (s.contains(leaf)) continue;
    Vertex support = t.support_of(leaf);
    if (t.degree(support) != 2) return {};
    Vertex hang = t.graph().neighbors(support)[0] == leaf
                      ? t.graph().neighbors(support)[1]
                      : t.graph().neighbors(support)[0];
    if (hang == near1) {
      ++at1;
    } else if (hang == near2) {
      ++at2;
    } else {
      return {};
    }
  }
  if (at1 == 0 || at2 == 0)
    return confirmed(t, {Kind::Pkt, {backbone, at1 + at2}});
  return confirmed(t,
                   {Kind::Pmn, {backbone, std::min(at1, at2), std::max(at1, at2)}});
}

}  // namespace

CriticalFamilyTag classify_critical_family(const TreeCert& t) {
  const SigmaResult s = sigma(t);
  const int n = t.order();
  if (n == 4) return confirmed(t, {Kind::Path, {4}});
  if (s.k() == 2) return classify_two_critical(t, s.sigma);
  if (s.k() == 1 && n % 2 == 0 && n >= 6)
    return confirmed(t, {Kind::Pkt, {4, (n - 4) / 2}});
  if (s.k() == n / 2 && n % 2 == 1)
    return confirmed(t, {Kind::Spider, {(n - 1) / 2}});
  return {};
}

}  // namespace treecrit
