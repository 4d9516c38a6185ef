#pragma once

#include <string>
#include <vector>

#include "treecrit/graph.hpp"

namespace treecrit {

/// A named tree built from its published edge definition. Vertices are
/// labelled as in the definition and then renumbered 0..n-1; `labels` keeps
/// the original label of every internal id.
struct FamilyTree {
  std::string family;
  std::vector<int> params;
  TreeCert tree;
  std::vector<std::string> labels;  // internal id -> label

  /// Throws InputError for an unknown label.
  Vertex id_of(const std::string& label) const;
  VertexSet ids_of(const std::vector<std::string>& labels) const;
  const std::string& label_of(Vertex v) const { return labels.at(v); }
  std::string name() const;
};

/// P_n on labels 1..n.
FamilyTree path(int n);

/// A_{2m+1} on labels 0..2m: center 0 and legs 0-i-(i+m).
FamilyTree spider_a(int m);

/// P_{k,t} on labels 1..2t+k: the path 2t+1..2t+k with t pendant 2-paths
/// (2i-1)-(2i) hung from label 2t+2.
FamilyTree p_kt(int k, int t);

/// P_{m,n1,n2} on labels 1..2s+m (s = n1+n2): the path 2s+1..2s+m, n1 pendant
/// 2-paths hung from 2s+2 and n2 from 2s+m-1.
FamilyTree p_mn1n2(int m, int n1, int n2);

/// S_{k,m,n}: three paths of lengths k <= m <= n sharing endpoint r. Labels
/// are "r", "a1".."ak", "b1".."bm", "c1".."cn", indexed by distance from r.
FamilyTree s_kmn(int k, int m, int n);

}  // namespace treecrit
