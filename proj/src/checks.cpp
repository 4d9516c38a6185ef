#include "treecrit/checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "treecrit/criticality.hpp"
#include "treecrit/enumeration.hpp"
#include "treecrit/families.hpp"
#include "treecrit/minimality.hpp"
#include "treecrit/primality.hpp"

namespace treecrit::checks {

namespace {

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges";
  for (const auto& [u, v] : g.edges()) out << ' ' << u << '-' << v;
  return out.str();
}

template <typename Body>
CheckResult timed(std::string name, Body&& body) {
  CheckResult r;
  r.name = std::move(name);
  auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

void fail(CheckResult& r, const std::string& why) {
  if (r.passed) r.detail = why;
  r.passed = false;
}

std::vector<TreeCert> prime_trees(int n) {
  return filter_trees(n, [](const TreeCert& t) { return tree_is_prime(t); });
}

VertexSet mask_set(std::uint32_t mask) {
  std::vector<Vertex> ids;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) ids.push_back(v);
  return VertexSet(std::move(ids));
}

VertexSet labels_to_ids(const FamilyTree& f, const std::vector<int>& labels) {
  std::vector<std::string> ls;
  for (int l : labels) ls.push_back(std::to_string(l));
  return f.ids_of(ls);
}

}  // namespace

Count partitions_into_two(Count k) {
  Count c = 0;
  for (Count a = 1; 2 * a <= k; ++a) ++c;
  return c;
}

Count partitions_into_three(Count k) {
  Count c = 0;
  for (Count a = 1; 3 * a <= k; ++a)
    for (Count b = a; a + 2 * b <= k; ++b) ++c;
  return c;
}

CheckResult count_formula_agreement(CountedFamily which, int n_max, int jobs) {
  return timed("count formula vs enumeration (" + to_string(which) +
                   ", n<=" + std::to_string(n_max) + ")",
               [&](CheckResult& r) {
                 CountTable table = verify_formula(n_max, which, jobs);
                 std::ostringstream rows;
                 for (const auto& row : table.rows) {
                   rows << row.n << ':' << row.enumerated << ' ';
                   if (!row.agree()) {
                     std::ostringstream why;
                     why << "n=" << row.n << " formula=" << row.formula
                         << " enumerated=" << row.enumerated;
                     fail(r, why.str());
                   }
                 }
                 if (r.passed) r.detail = "rows " + rows.str();
               });
}

CheckResult critical_characterization_equivalence(int n_min, int n_max) {
  return timed(
      "critical characterization <=> sigma (n=" + std::to_string(n_min) +
          ".." + std::to_string(n_max) + ")",
      [&](CheckResult& r) {
        std::int64_t trees = 0;
        std::int64_t sets = 0;
        for (int n = n_min; n <= n_max && r.passed; ++n)
          for (const auto& t : prime_trees(n)) {
            ++trees;
            const VertexSet s = sigma(t).sigma;
            if (s.empty() || !check_critical_characterization(t, s).overall()) {
              fail(r, "sigma " + to_string(s) + " rejected on " +
                          describe(t.graph()));
              break;
            }
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
              ++sets;
              VertexSet x = mask_set(mask);
              if (x != s && check_critical_characterization(t, x).overall()) {
                fail(r, "X=" + to_string(x) + " accepted but sigma=" +
                            to_string(s) + " on " + describe(t.graph()));
                break;
              }
            }
          }
        if (r.passed)
          r.detail = std::to_string(trees) + " prime trees, " +
                     std::to_string(sets) + " candidate sets";
      });
}

CheckResult minimal_characterization_equivalence(int n_min, int n_max) {
  return timed(
      "minimal characterization <=> definition (n=" + std::to_string(n_min) +
          ".." + std::to_string(n_max) + ")",
      [&](CheckResult& r) {
        std::int64_t pairs = 0;
        for (int n = n_min; n <= n_max && r.passed; ++n)
          for (const auto& t : prime_trees(n)) {
            for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
              ++pairs;
              VertexSet x = mask_set(mask);
              bool by_conditions = check_minimal_characterization(t, x).overall();
              bool by_definition = is_minimal_bruteforce(t, x);
              if (by_conditions != by_definition) {
                fail(r, "X=" + to_string(x) + " conditions=" +
                            std::to_string(by_conditions) + " definition=" +
                            std::to_string(by_definition) + " on " +
                            describe(t.graph()));
                break;
              }
            }
            if (!r.passed) break;
          }
        if (r.passed) r.detail = std::to_string(pairs) + " (T, X) pairs";
      });
}

CheckResult critical_uniqueness_claims(int n_max_one, int n_max_half,
                                       int n_max_p4) {
  return timed("uniqueness of (-1), (-n/2) and critical trees", [&](CheckResult& r) {
    for (int n = 5; n <= n_max_one; ++n) {
      auto hits = filter_trees(n, [](const TreeCert& t) {
        return tree_is_prime(t) && sigma(t).k() == 1;
      });
      std::size_t expected = n % 2 == 0 ? 1 : 0;
      if (hits.size() != expected) {
        fail(r, "(-1)-critical count " + std::to_string(hits.size()) +
                    " at n=" + std::to_string(n));
      } else if (expected == 1 &&
                 !are_isomorphic(hits[0], p_kt(4, (n - 4) / 2).tree)) {
        fail(r, "(-1)-critical tree at n=" + std::to_string(n) +
                    " is not P_{4,(n-4)/2}: " + describe(hits[0].graph()));
      }
    }
    for (int n = 5; n <= n_max_half; ++n) {
      auto hits = filter_trees(n, [n](const TreeCert& t) {
        return tree_is_prime(t) && sigma(t).k() == n / 2;
      });
      std::size_t expected = n % 2 == 1 ? 1 : 0;
      if (hits.size() != expected) {
        fail(r, "(-n/2)-critical count " + std::to_string(hits.size()) +
                    " at n=" + std::to_string(n));
      } else if (expected == 1 &&
                 !are_isomorphic(hits[0], spider_a((n - 1) / 2).tree)) {
        fail(r, "(-n/2)-critical tree at n=" + std::to_string(n) +
                    " is not A_n: " + describe(hits[0].graph()));
      }
    }
    int critical = 0;
    for (int n = 4; n <= n_max_p4; ++n)
      for (const auto& t : prime_trees(n))
        if (sigma(t).sigma.empty()) {
          ++critical;
          if (!are_isomorphic(t, path(4).tree))
            fail(r, "critical tree other than P4: " + describe(t.graph()));
        }
    if (critical != 1)
      fail(r, std::to_string(critical) + " critical trees, expected 1 (P4)");
    if (r.passed)
      r.detail = "(-1): n<=" + std::to_string(n_max_one) + ", (-n/2): n<=" +
                 std::to_string(n_max_half) + ", sigma empty: n<=" +
                 std::to_string(n_max_p4);
  });
}

CheckResult tree_primality_oracle(int n_max) {
  return timed("leaf-distance primality <=> module search (n<=" +
                   std::to_string(n_max) + ")",
               [&](CheckResult& r) {
                 std::int64_t trees = 0;
                 for (int n = 1; n <= n_max; ++n)
                   for (const auto& t : all_trees(n)) {
                     ++trees;
                     const Graph& g = t.graph();
                     if (tree_is_prime(t) != is_prime(g)) {
                       fail(r, "verdicts differ on " + describe(g));
                       continue;
                     }
                     if (tree_nontrivial_modules_witness(t) !=
                         find_nontrivial_module(g))
                       fail(r, "witnesses differ on " + describe(g));
                     for (const auto& m : all_nontrivial_modules(g))
                       for (Vertex v : m.members)
                         if (!t.is_leaf(v) && n >= 4)
                           fail(r, "module " + to_string(m.members) +
                                       " holds a non-leaf in " + describe(g));
                   }
                 if (r.passed) r.detail = std::to_string(trees) + " trees";
               });
}

CheckResult class_count_oracle(int n_max) {
  return timed("free tree classes <=> Prüfer enumeration (n<=" +
                   std::to_string(n_max) + ")",
               [&](CheckResult& r) {
                 std::ostringstream counts;
                 for (int n = 1; n <= n_max; ++n) {
                   std::set<CanonicalCode> from_labeled;
                   std::int64_t labeled = 0;
                   for_each_labeled_tree(n, [&](const Graph& g) {
                     ++labeled;
                     from_labeled.insert(canonical_form(certify_tree(g)));
                   });
                   std::set<CanonicalCode> generated;
                   auto trees = all_trees(n);
                   for (const auto& t : trees) generated.insert(canonical_form(t));
                   std::int64_t cayley = 1;
                   for (int i = 0; i < n - 2; ++i) cayley *= n;
                   if (labeled != cayley)
                     fail(r, "n=" + std::to_string(n) + ": " +
                                 std::to_string(labeled) + " labeled trees");
                   if (generated.size() != trees.size())
                     fail(r, "duplicate classes at n=" + std::to_string(n));
                   if (generated != from_labeled)
                     fail(r, "class sets differ at n=" + std::to_string(n));
                   counts << n << ':' << trees.size() << ' ';
                 }
                 if (r.passed) r.detail = "classes " + counts.str();
               });
}

CheckResult partition_oracle(Count k_max) {
  return timed("p2/p3 <=> partition enumeration (k<=" +
                   std::to_string(k_max) + ")",
               [&](CheckResult& r) {
                 for (Count k = 0; k <= k_max; ++k) {
                   if (p2(k) != partitions_into_two(k))
                     fail(r, "p2 differs at k=" + std::to_string(k));
                   if (p3(k) != partitions_into_three(k))
                     fail(r, "p3 differs at k=" + std::to_string(k));
                 }
                 if (r.passed)
                   r.detail = std::to_string(k_max + 1) + " values each";
               });
}

CheckResult leaf_deletion_module_uniqueness(int n_max) {
  return timed(
      "unique module of T-x (n<=" + std::to_string(n_max) + ")",
      [&](CheckResult& r) {
        std::int64_t cases = 0;
        for (int n = 4; n <= n_max; ++n)
          for (const auto& t : prime_trees(n))
            for (Vertex x : t.leaves()) {
              auto rest = delete_vertices(t.graph(), VertexSet{x});
              auto modules = all_nontrivial_modules(rest.graph);
              auto claimed = unique_module_of_leaf_deletion(t, x);
              if (modules.empty()) {
                if (claimed) fail(r, "module claimed for prime T-x");
                continue;
              }
              ++cases;
              if (modules.size() != 1) {
                fail(r, std::to_string(modules.size()) +
                            " modules after deleting " + std::to_string(x) +
                            " from " + describe(t.graph()));
                continue;
              }
              VertexSet m = rest.lift(modules[0].members);
              Vertex support = t.support_of(x);
              bool shape = m.size() == 2 && m.contains(support);
              Vertex y = shape ? (m[0] == support ? m[1] : m[0]) : -1;
              if (!shape || !t.is_leaf(y))
                fail(r, "module " + to_string(m) + " is not {y, x+} for x=" +
                            std::to_string(x) + " in " + describe(t.graph()));
              if (!claimed || claimed->members != m)
                fail(r, "unique_module_of_leaf_deletion disagrees on " +
                            describe(t.graph()));
            }
        if (r.passed)
          r.detail = std::to_string(cases) + " decomposable leaf deletions";
      });
}

CheckResult minimal_extraction(int instances, int n_max, std::uint32_t seed) {
  return timed(
      "minimal subtree extraction (" + std::to_string(instances) +
          " random instances, n<=" + std::to_string(n_max) + ")",
      [&](CheckResult& r) {
        std::vector<TreeCert> pool;
        for (int n = 4; n <= n_max; ++n)
          for (auto& t : prime_trees(n)) pool.push_back(std::move(t));
        std::mt19937 rng(seed);
        std::map<int, int> sizes;
        for (int i = 0; i < instances; ++i) {
          const TreeCert& h =
              pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
          std::vector<Vertex> ids(static_cast<std::size_t>(h.order()));
          std::iota(ids.begin(), ids.end(), 0);
          std::shuffle(ids.begin(), ids.end(), rng);
          ids.resize(std::uniform_int_distribution<std::size_t>(1, ids.size())(rng));
          const VertexSet x(ids);

          auto out = extract_minimal_subtree(h, x);
          ++sizes[out.tree.order()];
          std::vector<Vertex> lifted;
          for (Vertex v : out.x) lifted.push_back(out.original[v]);
          const std::string where =
              "X=" + to_string(x) + " in " + describe(h.graph());
          if (VertexSet(lifted) != x) fail(r, "output lost X: " + where);
          if (!tree_is_prime(out.tree)) fail(r, "output not prime: " + where);
          if (out.tree.order() >= 5 &&
              !check_minimal_characterization(out.tree, out.x).overall())
            fail(r, "output fails the characterization: " + where);
          if (!is_minimal_bruteforce(out.tree, out.x))
            fail(r, "output fails the definition: " + where);
        }
        if (r.passed) {
          std::ostringstream d;
          d << "output orders";
          for (auto [n, c] : sizes) d << ' ' << n << 'x' << c;
          r.detail = d.str();
        }
      });
}

CheckResult family_self_verification() {
  return timed("family constructors match their stated sigma", [](CheckResult& r) {
    auto expect = [&](const FamilyTree& f, const VertexSet& want,
                      int order) {
      if (f.tree.order() != order)
        fail(r, f.name() + " has " + std::to_string(f.tree.order()) +
                    " vertices");
      VertexSet got = sigma(f.tree).sigma;
      if (got != want)
        fail(r, f.name() + " sigma " + to_string(got) + " expected " +
                    to_string(want));
    };
    for (int m = 2; m <= 6; ++m) {
      auto f = spider_a(m);
      expect(f, f.tree.leaves(), 2 * m + 1);
    }
    for (int k = 5; k <= 8; ++k)
      for (int t = 1; t <= 3; ++t) {
        auto f = p_kt(k, t);
        expect(f, labels_to_ids(f, {2 * t + 1, 2 * t + k}), 2 * t + k);
        if (classify_critical_family(f.tree) !=
            CriticalFamilyTag{CriticalFamilyTag::Kind::Pkt, {k, t}})
          fail(r, f.name() + " misclassified");
      }
    for (int t = 1; t <= 5; ++t) {
      auto f = p_kt(4, t);
      expect(f, labels_to_ids(f, {2 * t + 1}), 2 * t + 4);
    }
    for (int m = 4; m <= 7; ++m)
      for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = n1; n2 <= 3; ++n2) {
          auto f = p_mn1n2(m, n1, n2);
          int s = n1 + n2;
          expect(f, labels_to_ids(f, {2 * s + 1, 2 * s + m}), 2 * s + m);
          if (classify_critical_family(f.tree) !=
              CriticalFamilyTag{CriticalFamilyTag::Kind::Pmn, {m, n1, n2}})
            fail(r, f.name() + " misclassified");
        }
    if (r.passed)
      r.detail = "A(2..6), Pkt(5..8,1..3), Pkt(4,1..5), Pmn(4..7,n1<=n2<=3)";
  });
}

CheckResult family_distinctness(int n_max) {
  return timed("named families are pairwise non-isomorphic (n<=" +
                   std::to_string(n_max) + ")",
               [&](CheckResult& r) {
                 std::vector<FamilyTree> critical;
                 for (int m = 5; m <= n_max; ++m) critical.push_back(path(m));
                 for (int k = 5; k <= n_max; ++k)
                   for (int t = 1; 2 * t + k <= n_max; ++t)
                     critical.push_back(p_kt(k, t));
                 for (int m = 4; m <= n_max; ++m)
                   for (int n1 = 1; m + 4 * n1 <= n_max; ++n1)
                     for (int n2 = n1; m + 2 * (n1 + n2) <= n_max; ++n2)
                       critical.push_back(p_mn1n2(m, n1, n2));
                 std::vector<FamilyTree> minimal;
                 for (int k = 4; k <= n_max; ++k) minimal.push_back(path(k));
                 for (int k = 1; k <= 2; ++k)
                   for (int n = 2; k + 2 + n + 1 <= n_max; ++n)
                     minimal.push_back(s_kmn(k, 2, n));
                 for (const auto* group : {&critical, &minimal}) {
                   std::map<CanonicalCode, std::string> seen;
                   for (const auto& f : *group) {
                     auto [it, fresh] =
                         seen.emplace(canonical_form(f.tree), f.name());
                     if (!fresh)
                       fail(r, f.name() + " is isomorphic to " + it->second);
                   }
                 }
                 if (r.passed)
                   r.detail = std::to_string(critical.size()) +
                              " (-2)-critical members, " +
                              std::to_string(minimal.size()) +
                              " 3-minimal members";
               });
}

CheckResult canonical_relabel_invariance(int n_max, int relabels,
                                         std::uint32_t seed) {
  return timed("canonical form is relabeling-invariant (n<=" +
                   std::to_string(n_max) + ")",
               [&](CheckResult& r) {
                 std::mt19937 rng(seed);
                 std::int64_t trials = 0;
                 for (int n = 1; n <= n_max; ++n)
                   for (const auto& t : all_trees(n)) {
                     const CanonicalCode code = canonical_form(t);
                     std::vector<Vertex> perm(static_cast<std::size_t>(n));
                     std::iota(perm.begin(), perm.end(), 0);
                     for (int i = 0; i < relabels; ++i) {
                       std::shuffle(perm.begin(), perm.end(), rng);
                       std::vector<Edge> edges;
                       for (auto [u, v] : t.graph().edges())
                         edges.emplace_back(perm[u], perm[v]);
                       ++trials;
                       if (canonical_form(certify_tree(build_graph(n, edges))) !=
                           code)
                         fail(r, "relabeling changed the code of " +
                                     describe(t.graph()));
                     }
                   }
                 if (r.passed) r.detail = std::to_string(trials) + " relabelings";
               });
}

std::vector<std::function<CheckResult()>> standard_suites(int jobs) {
  return {
      [jobs] { return count_formula_agreement(CountedFamily::Minus2Critical, 14, jobs); },
      [jobs] { return count_formula_agreement(CountedFamily::ThreeMinimal, 14, jobs); },
      [] { return critical_characterization_equivalence(5, 12); },
      [] { return minimal_characterization_equivalence(5, 9); },
      [] { return critical_uniqueness_claims(14, 13, 12); },
      [] { return tree_primality_oracle(9); },
      [] { return class_count_oracle(9); },
      [] { return partition_oracle(200); },
      [] { return leaf_deletion_module_uniqueness(10); },
      [] { return minimal_extraction(200, 9, 20240611u); },
      [] { return family_self_verification(); },
      [] { return family_distinctness(14); },
      [] { return canonical_relabel_invariance(10, 50, 7u); },
  };
}

}  // namespace treecrit::checks
