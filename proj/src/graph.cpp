#include "treecrit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace treecrit {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int n) {
  std::vector<Vertex> ids(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) ids[i] = i;
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  return os << to_string(s);
}

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

void check_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v))
    throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(g.order()) + ")");
}

}  // namespace

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  Graph g;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
      throw InputError("edge " + edge_text(e) + " has endpoint out of range");
    if (e.first == e.second)
      throw InputError("edge " + edge_text(e) + " is a self-loop");
    g.adj_[e.first].push_back(e.second);
    g.adj_[e.second].push_back(e.first);
  }
  std::size_t half_edges = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    half_edges += nbrs.size();
  }
  g.edge_count_ = half_edges / 2;
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return adj_[v];
}

int Graph::degree(Vertex v) const {
  check_vertex(*this, v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }

std::vector<Distance> distances_from(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<Distance> dist(static_cast<std::size_t>(g.order()));
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w]) continue;
      dist[w] = *dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  return distances_from(g, u)[v];
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> members{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex w : g.neighbors(members[i]))
        if (!seen[w]) {
          seen[w] = 1;
          members.push_back(w);
        }
    out.emplace_back(std::move(members));
  }
  return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local) const {
  std::vector<Vertex> ids;
  ids.reserve(local.size());
  for (Vertex v : local) ids.push_back(original.at(v));
  return VertexSet(std::move(ids));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!g.has_vertex(keep[i]))
      throw InputError("vertex set " + to_string(keep) +
                       " is not a subset of the graph's vertices");
    local[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : keep)
    for (Vertex w : g.neighbors(u))
      if (u < w && local[w] >= 0) edges.emplace_back(local[u], local[w]);
  return {build_graph(static_cast<int>(keep.size()), edges), keep.ids()};
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop.contains(v)) keep.push_back(v);
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

bool is_tree(const Graph& g) {
  if (g.order() == 0) return false;
  if (g.edge_count() != static_cast<std::size_t>(g.order() - 1)) return false;
  return connected_components(g).size() == 1;
}

TreeCert certify_tree(Graph g) {
  if (g.order() == 0) throw NotATreeError("not a tree: empty graph");
  if (g.edge_count() != static_cast<std::size_t>(g.order() - 1))
    throw NotATreeError("not a tree: " + std::to_string(g.edge_count()) +
                        " edges on " + std::to_string(g.order()) +
                        " vertices");
  if (connected_components(g).size() != 1)
    throw NotATreeError("not a tree: graph is disconnected");
  return TreeCert(std::move(g));
}

TreeCert::TreeCert(Graph g) : graph_(std::move(g)) {
  const int n = graph_.order();
  std::vector<Vertex> leaves;
  std::vector<Vertex> supports;
  for (Vertex v = 0; v < n; ++v)
    if (graph_.degree(v) == 1) {
      leaves.push_back(v);
      supports.push_back(graph_.neighbors(v)[0]);
    }
  leaves_ = VertexSet(std::move(leaves));
  supports_ = VertexSet(std::move(supports));

  dist_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Vertex s = 0; s < n; ++s) {
    auto row = distances_from(graph_, s);
    for (Vertex v = 0; v < n; ++v)
      dist_[static_cast<std::size_t>(s) * n + v] = *row[v];
  }
}

Vertex TreeCert::support_of(Vertex leaf) const {
  if (!is_leaf(leaf))
    throw InputError("vertex " + std::to_string(leaf) + " is not a leaf");
  return graph_.neighbors(leaf)[0];
}

VertexSet TreeCert::leaf_neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w : graph_.neighbors(v))
    if (is_leaf(w)) out.push_back(w);
  return VertexSet(std::move(out));
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& token, int line_no) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw InputError("line " + std::to_string(line_no) + ": '" + token +
                     "' is not an integer");
  return value;
}

}  // namespace

EdgeListDocument parse_edge_list(std::istream& in) {
  EdgeListDocument doc;
  std::optional<int> n;
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      doc.comments.push_back(trim(t.substr(1)));
      continue;
    }
    std::istringstream fields(t);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (!n) {
      if (tokens.size() != 1)
        throw InputError("line " + std::to_string(line_no) +
                         ": expected the vertex count");
      n = parse_int(tokens[0], line_no);
      if (*n < 0)
        throw InputError("line " + std::to_string(line_no) +
                         ": negative vertex count");
      continue;
    }
    if (tokens.size() != 2)
      throw InputError("line " + std::to_string(line_no) +
                       ": expected 'u v'");
    edges.emplace_back(parse_int(tokens[0], line_no),
                       parse_int(tokens[1], line_no));
  }
  if (!n) throw InputError("edge list has no vertex count line");
  doc.graph = build_graph(*n, edges);
  return doc;
}

EdgeListDocument parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_dot(std::ostream& out, const Graph& g,
               std::span<const std::string> labels) {
  out << "graph {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (static_cast<std::size_t>(v) < labels.size())
      out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace treecrit
