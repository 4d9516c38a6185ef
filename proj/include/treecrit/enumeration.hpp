#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "treecrit/graph.hpp"

namespace treecrit {

inline constexpr int kFreeTreeGuard = 18;
inline constexpr int kLabeledTreeGuard = 9;

/// AHU encoding rooted at the centroid. Equal codes <=> isomorphic trees.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::string hex() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

/// AHU encoding of the tree rooted at `root`: '(' + sorted child codes + ')'.
std::string rooted_code(const Graph& tree, Vertex root);

/// One or two centroids, ascending.
std::vector<Vertex> centroids(const Graph& tree);

CanonicalCode canonical_form(const TreeCert& t);
bool are_isomorphic(const TreeCert& a, const TreeCert& b);

/// One representative per isomorphism class, sorted by canonical code.
/// Throws GuardExceeded past kFreeTreeGuard.
std::vector<TreeCert> all_trees(int n, int guard = kFreeTreeGuard);

/// Oracle: every labeled tree on n vertices, decoded from Prüfer sequences.
/// The visitor sees each of the n^(n-2) trees once.
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit,
                           int guard = kLabeledTreeGuard);
std::vector<Graph> all_labeled_trees(int n, int guard = kLabeledTreeGuard);

/// Tree on n vertices with the given Prüfer sequence (length n-2).
Graph prufer_decode(int n, const std::vector<int>& sequence);

using TreePredicate = std::function<bool(const TreeCert&)>;

/// Number of isomorphism classes on n vertices satisfying pred. With jobs > 1
/// the predicate is evaluated on worker threads.
std::int64_t count_by_predicate(int n, const TreePredicate& pred, int jobs = 1);

/// The trees on n vertices satisfying pred, in all_trees order.
std::vector<TreeCert> filter_trees(int n, const TreePredicate& pred,
                                   int jobs = 1);

}  // namespace treecrit
