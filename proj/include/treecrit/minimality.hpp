#pragma once

#include <string>
#include <vector>

#include "treecrit/graph.hpp"
#include "treecrit/report.hpp"

namespace treecrit {

inline constexpr int kMinimalityGuard = 16;

/// Definitional test: no W with X <= W < V induces a prime subgraph.
/// Throws NotPrimeError or GuardExceeded.
bool is_minimal_bruteforce(const TreeCert& t, const VertexSet& x,
                           int guard = kMinimalityGuard);

/// Three-condition characterization of "T is minimal for X", n >= 5:
///   1. distinct leaves are at distance >= 3;
///   2. every leaf or its support lies in X;
///   3. a member x_i of X that is a support whose leaf is outside X has
///      degree 2 and lies at distance 2 from another member of X that is a
///      leaf.
ConditionReport check_minimal_characterization(const TreeCert& t,
                                               const VertexSet& x);

/// T prime and minimal for X; the four-vertex case goes through the
/// definition, larger trees through the characterization.
bool is_minimal(const TreeCert& t, const VertexSet& x);

enum class MinimalityRoute { Characterization, BruteForce };

/// Some k-element X makes T minimal.
bool is_k_minimal(const TreeCert& t, int k,
                  MinimalityRoute route = MinimalityRoute::Characterization);

struct MinimalSubtree {
  TreeCert tree;
  std::vector<Vertex> original;  // subtree id -> host id
  VertexSet x;                   // X in subtree ids
};

/// Greedy shrinking of a prime tree H around X: repeatedly delete the first
/// vertex outside X (increasing id) whose removal keeps the tree prime; when
/// no single vertex works, the first such pair. Stops when nothing can go.
MinimalSubtree extract_minimal_subtree(const TreeCert& h, const VertexSet& x);

enum class ThreeMinimalForm {
  P4,            // T = P4
  Path,          // T = P_k, k >= 5, X holds both leaves
  Spider,        // T = S_{k,m,n}, m >= 2, X = the three leaves
  SpiderA1B1Cn,  // T = S_{1,2,n}, X = {a1, b1, c_n}
  SpiderA1B1C1,  // T = S_{1,2,2}, X = {a1, b1, c1}
  NotMinimal,
  Unmatched,  // minimal, but none of the five forms fits
};

struct ThreeMinimalClass {
  ThreeMinimalForm form = ThreeMinimalForm::NotMinimal;
  std::vector<int> params;

  /// 1..5 for the named forms, 0 otherwise.
  int number() const;
  std::string to_string() const;
};

ThreeMinimalClass classify_3_minimal(const TreeCert& t, const VertexSet& x);

}  // namespace treecrit
