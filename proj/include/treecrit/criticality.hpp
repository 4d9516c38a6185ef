#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treecrit/graph.hpp"
#include "treecrit/primality.hpp"
#include "treecrit/report.hpp"

namespace treecrit {

/// Non-critical vertices of a prime graph: those x with G-x still prime.
struct SigmaResult {
  VertexSet sigma;
  int k() const { return static_cast<int>(sigma.size()); }
};

/// Trees use the leaf-distance criterion per deletion; other graphs fall back
/// to exhaustive module search within the guard. Throws NotPrimeError.
SigmaResult sigma(const Graph& g, int guard = kModuleSearchGuard);
SigmaResult sigma(const TreeCert& t);

/// Exhaustive module search on every G-x, for any graph within the guard.
SigmaResult sigma_by_module_search(const Graph& g,
                                   int guard = kModuleSearchGuard);

/// Four-condition characterization of "T is (-k)-critical with sigma(T) = X"
/// for trees on at least five vertices:
///   1. distinct leaves are at distance >= 3;
///   2. X is a set of leaves and 1 <= |X| <= n/2;
///   3. each leaf outside X is at distance 3 from exactly one member of X,
///      and its support has degree 2;
///   4. a member of X whose support has degree 2 is at distance >= 4 from
///      every other leaf.
ConditionReport check_critical_characterization(const TreeCert& t,
                                                const VertexSet& x);

/// For a prime tree T and a leaf x with T-x decomposable, the only nontrivial
/// module of T-x, which is {y, x+} for some leaf y. Ids refer to T. Empty when
/// T-x is prime. Throws NotPrimeError / InputError on bad input.
std::optional<ModuleWitness> unique_module_of_leaf_deletion(const TreeCert& t,
                                                            Vertex x);

bool is_k_critical(const TreeCert& t, int k);

struct CriticalFamilyTag {
  enum class Kind { Path, Pkt, Pmn, Spider, Other };
  Kind kind = Kind::Other;
  std::vector<int> params;

  std::string to_string() const;
  friend bool operator==(const CriticalFamilyTag&,
                         const CriticalFamilyTag&) = default;
};

/// Named family of a prime tree with |sigma| in {1, 2, n/2}, recovered from
/// its structure and confirmed by canonical-form equality with the
/// constructed family member; Other when nothing matches.
CriticalFamilyTag classify_critical_family(const TreeCert& t);

}  // namespace treecrit
