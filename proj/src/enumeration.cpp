#include "treecrit/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace treecrit {

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out += kDigits[c >> 4];
    out += kDigits[c & 0xf];
  }
  return out;
}

std::string rooted_code(const Graph& tree, Vertex root) {
  const int n = tree.order();
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : tree.neighbors(order[i]))
      if (parent[w] < 0) {
        parent[w] = order[i];
        order.push_back(w);
      }

  std::vector<std::vector<std::string>> child_codes(
      static_cast<std::size_t>(n));
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_codes[*it];
    std::sort(kids.begin(), kids.end());
    code.clear();
    code += '(';
    for (const auto& k : kids) code += k;
    code += ')';
    kids.clear();
    kids.shrink_to_fit();
    if (*it != root) child_codes[parent[*it]].push_back(code);
  }
  return code;
}

std::vector<Vertex> centroids(const Graph& tree) {
  const int n = tree.order();
  if (n == 0) return {};
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : tree.neighbors(order[i]))
      if (parent[w] < 0) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  std::vector<int> heaviest(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it == 0) break;
    size[parent[*it]] += size[*it];
    heaviest[parent[*it]] = std::max(heaviest[parent[*it]], size[*it]);
  }
  int best = n;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int worst = std::max(heaviest[v], n - size[v]);
    if (worst < best) {
      best = worst;
      out.clear();
    }
    if (worst == best) out.push_back(v);
  }
  return out;
}

CanonicalCode canonical_form(const TreeCert& t) {
  auto cs = centroids(t.graph());
  std::string best = rooted_code(t.graph(), cs[0]);
  if (cs.size() == 2) best = std::min(best, rooted_code(t.graph(), cs[1]));
  return CanonicalCode(std::move(best));
}

bool are_isomorphic(const TreeCert& a, const TreeCert& b) {
  if (a.order() != b.order()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

// Rooted tree as a parent array in preorder; parent[0] == -1.
using Rooted = std::vector<int>;

struct ChildRef {
  int size;
  int index;
};

class RootedCatalog {
 public:
  explicit RootedCatalog(int max_size) : by_size_(max_size + 1) {
    if (max_size >= 1) by_size_[1].push_back(Rooted{-1});
    for (int s = 2; s <= max_size; ++s) {
      std::vector<ChildRef> kids;
      for_each_child_multiset(s - 1, s - 1, -1, kids, [&](const auto& ks) {
        by_size_[s].push_back(assemble(ks));
      });
    }
  }

  const Rooted& get(ChildRef ref) const { return by_size_[ref.size][ref.index]; }
  int count(int size) const { return static_cast<int>(by_size_[size].size()); }

  // Non-increasing sequences of (size, index) with sizes summing to
  // `remaining`, each size at most max_size. max_index bounds the index when
  // the size equals max_size (-1 means unbounded).
  template <typename Emit>
  void for_each_child_multiset(int remaining, int max_size, int max_index,
                               std::vector<ChildRef>& kids,
                               Emit&& emit) const {
    if (remaining == 0) {
      emit(kids);
      return;
    }
    for (int s = std::min(remaining, max_size); s >= 1; --s) {
      int top = count(s) - 1;
      if (s == max_size && max_index >= 0) top = std::min(top, max_index);
      for (int i = top; i >= 0; --i) {
        kids.push_back({s, i});
        for_each_child_multiset(remaining - s, s, i, kids, emit);
        kids.pop_back();
      }
    }
  }

  Rooted assemble(const std::vector<ChildRef>& kids) const {
    Rooted out{-1};
    for (const auto& ref : kids) {
      const Rooted& sub = get(ref);
      int offset = static_cast<int>(out.size());
      for (std::size_t v = 0; v < sub.size(); ++v)
        out.push_back(v == 0 ? 0 : sub[v] + offset);
    }
    return out;
  }

 private:
  std::vector<std::vector<Rooted>> by_size_;
};

Graph graph_from_parents(const Rooted& parents) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < parents.size(); ++v)
    edges.emplace_back(parents[v], static_cast<Vertex>(v));
  return build_graph(static_cast<int>(parents.size()), edges);
}

}  // namespace

std::vector<TreeCert> all_trees(int n, int guard) {
  if (n < 1) throw InputError("tree enumeration needs n >= 1");
  if (n > guard) throw GuardExceeded("free tree enumeration", n, guard);

  // Each class is generated exactly once: unicentroidal trees are rooted at
  // the centroid with every branch below n/2; bicentroidal trees are an
  // unordered pair of n/2-vertex rooted trees joined at their roots.
  RootedCatalog catalog(n / 2);
  std::vector<Rooted> shapes;
  std::vector<ChildRef> kids;
  catalog.for_each_child_multiset(n - 1, (n - 1) / 2, -1, kids,
                                  [&](const auto& ks) {
                                    shapes.push_back(catalog.assemble(ks));
                                  });
  if (n == 1) shapes.push_back(Rooted{-1});
  if (n % 2 == 0) {
    const int half = n / 2;
    for (int a = 0; a < catalog.count(half); ++a)
      for (int b = a; b < catalog.count(half); ++b) {
        Rooted joined = catalog.get({half, a});
        const Rooted& other = catalog.get({half, b});
        for (std::size_t v = 0; v < other.size(); ++v)
          joined.push_back(v == 0 ? 0 : other[v] + half);
        shapes.push_back(std::move(joined));
      }
  }

  std::vector<std::pair<CanonicalCode, TreeCert>> coded;
  coded.reserve(shapes.size());
  for (const auto& p : shapes) {
    TreeCert t = certify_tree(graph_from_parents(p));
    CanonicalCode c = canonical_form(t);
    coded.emplace_back(std::move(c), std::move(t));
  }
  std::sort(coded.begin(), coded.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  coded.erase(std::unique(coded.begin(), coded.end(),
                          [](const auto& x, const auto& y) {
                            return x.first == y.first;
                          }),
              coded.end());
  std::vector<TreeCert> out;
  out.reserve(coded.size());
  for (auto& [code, tree] : coded) out.push_back(std::move(tree));
  return out;
}

Graph prufer_decode(int n, const std::vector<int>& sequence) {
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2)
    throw InputError("Prüfer sequence length must be n-2 with n >= 2");
  std::vector<int> remaining_degree(static_cast<std::size_t>(n), 1);
  for (int s : sequence) {
    if (s < 0 || s >= n) throw InputError("Prüfer label out of range");
    ++remaining_degree[s];
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int s : sequence) {
    Vertex leaf = 0;
    while (remaining_degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, s);
    --remaining_degree[leaf];
    --remaining_degree[s];
  }
  Vertex u = -1;
  for (Vertex v = 0; v < n; ++v)
    if (remaining_degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
        break;
      }
    }
  return build_graph(n, edges);
}

void for_each_labeled_tree(int n,
                           const std::function<void(const Graph&)>& visit,
                           int guard) {
  if (n < 1) throw InputError("labeled tree enumeration needs n >= 1");
  if (n > guard) throw GuardExceeded("labeled tree enumeration", n, guard);
  if (n == 1) {
    visit(build_graph(1, {}));
    return;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    visit(prufer_decode(n, seq));
    std::size_t i = 0;
    while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
    if (i == seq.size()) break;
    ++seq[i];
  }
}

std::vector<Graph> all_labeled_trees(int n, int guard) {
  std::vector<Graph> out;
  for_each_labeled_tree(
      n, [&](const Graph& g) { out.push_back(g); }, guard);
  return out;
}

namespace {

std::vector<char> evaluate(const std::vector<TreeCert>& trees,
                           const TreePredicate& pred, int jobs) {
  std::vector<char> hits(trees.size(), 0);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < trees.size(); ++i) hits[i] = pred(trees[i]);
    return hits;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < trees.size(); i = next++)
      hits[i] = pred(trees[i]);
  };
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j) workers.emplace_back(work);
  for (auto& w : workers) w.join();
  return hits;
}

}  // namespace

std::int64_t count_by_predicate(int n, const TreePredicate& pred, int jobs) {
  auto hits = evaluate(all_trees(n), pred, jobs);
  return std::count(hits.begin(), hits.end(), 1);
}

std::vector<TreeCert> filter_trees(int n, const TreePredicate& pred,
                                   int jobs) {
  auto trees = all_trees(n);
  auto hits = evaluate(trees, pred, jobs);
  std::vector<TreeCert> out;
  for (std::size_t i = 0; i < trees.size(); ++i)
    if (hits[i]) out.push_back(std::move(trees[i]));
  return out;
}

}  // namespace treecrit
