#pragma once

#include <optional>
#include <vector>

#include "treecrit/graph.hpp"

namespace treecrit {

/// Default vertex limit for exhaustive module search.
inline constexpr int kModuleSearchGuard = 20;

/// A nontrivial module: at least two members and not the whole vertex set.
struct ModuleWitness {
  VertexSet members;

  friend bool operator==(const ModuleWitness&, const ModuleWitness&) = default;
};

/// Every vertex outside m sees all of m or none of it.
bool is_module(const Graph& g, const VertexSet& m);

/// Exhaustive search. Subsets are scanned by increasing size, then in
/// lexicographic order, and the first module hit is returned.
std::optional<ModuleWitness> find_nontrivial_module(
    const Graph& g, int guard = kModuleSearchGuard);

/// Every nontrivial module, in the same order as find_nontrivial_module.
std::vector<ModuleWitness> all_nontrivial_modules(
    const Graph& g, int guard = kModuleSearchGuard);

/// No nontrivial module, regardless of size.
bool is_indecomposable(const Graph& g, int guard = kModuleSearchGuard);

/// Indecomposable with at least four vertices.
bool is_prime(const Graph& g, int guard = kModuleSearchGuard);
bool is_prime(const TreeCert& t);

/// Leaf-distance criterion: n >= 4 and distinct leaves are >= 3 apart.
bool tree_is_prime(const TreeCert& t);

/// Lexicographically smallest pair of distinct leaves sharing a support.
std::optional<ModuleWitness> tree_nontrivial_modules_witness(
    const TreeCert& t);

/// Primality of the subgraph induced by `keep` in a tree, using the forest
/// criterion (connected, >= 4 vertices, no two leaves share a support).
bool induced_tree_is_prime(const TreeCert& t, const std::vector<char>& keep);

}  // namespace treecrit
