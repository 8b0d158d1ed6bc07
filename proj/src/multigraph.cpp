#include "chirality/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace chirality {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw std::invalid_argument("vertex id " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n) + ")");
}

}  // namespace

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges,
                       std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("label list does not match vertex count");

  std::map<VertexPair, long long> acc;
  for (const Edge& e : edges) {
    if (e.u == e.w)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    check_vertex(e.u, n_);
    check_vertex(e.w, n_);
    if (e.mult < 1) throw std::invalid_argument("edge multiplicity must be >= 1");
    acc[{std::min(e.u, e.w), std::max(e.u, e.w)}] += e.mult;
  }
  edges_.reserve(acc.size());
  for (const auto& [pair, m] : acc)
    edges_.push_back(Edge{pair.first, pair.second, static_cast<int>(m)});
}

MultiGraph MultiGraph::from_edge_list(int vertex_count,
                                      const std::vector<VertexPair>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, w] : pairs) edges.push_back(Edge{u, w, 1});
  return MultiGraph(vertex_count, std::move(edges));
}

int MultiGraph::edge_count() const {
  int total = 0;
  for (const Edge& e : edges_) total += e.mult;
  return total;
}

std::vector<VertexPair> MultiGraph::pairs() const {
  std::vector<VertexPair> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.w);
  return out;
}

std::string MultiGraph::label(int v) const {
  check_vertex(v, n_);
  if (labels_.empty()) return std::to_string(v);
  return labels_[v];
}

int MultiGraph::multiplicity(int u, int w) const {
  if (u == w) return 0;
  check_vertex(u, n_);
  check_vertex(w, n_);
  const Edge probe{std::min(u, w), std::max(u, w), 1};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                             [](const Edge& a, const Edge& b) {
                               return std::pair(a.u, a.w) < std::pair(b.u, b.w);
                             });
  if (it != edges_.end() && it->u == probe.u && it->w == probe.w) return it->mult;
  return 0;
}

bool MultiGraph::is_simple() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.mult == 1; });
}

int MultiGraph::degree(int v) const {
  check_vertex(v, n_);
  int d = 0;
  for (const Edge& e : edges_)
    if (e.u == v || e.w == v) d += e.mult;
  return d;
}

std::vector<int> MultiGraph::neighbors(int v) const {
  check_vertex(v, n_);
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.u == v) out.push_back(e.w);
    if (e.w == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MultiGraph MultiGraph::with_labels(std::vector<std::string> labels) const {
  return MultiGraph(n_, edges_, std::move(labels));
}

MultiGraph MultiGraph::skeleton() const {
  std::vector<Edge> simple = edges_;
  for (Edge& e : simple) e.mult = 1;
  return MultiGraph(n_, std::move(simple), labels_);
}

MultiGraph complement(const MultiGraph& g) {
  if (!g.is_simple())
    throw std::domain_error("complement is defined for simple graphs only");
  std::vector<Edge> edges;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int w = u + 1; w < g.vertex_count(); ++w)
      if (!g.adjacent(u, w)) edges.push_back(Edge{u, w, 1});
  return MultiGraph(g.vertex_count(), std::move(edges), g.labels());
}

std::pair<std::vector<int>, int> degree_info(const MultiGraph& g) {
  std::vector<int> seq(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    seq[e.u] += e.mult;
    seq[e.w] += e.mult;
  }
  std::sort(seq.begin(), seq.end(), std::greater<int>());
  const int min_degree = seq.empty() ? 0 : seq.back();
  return {std::move(seq), min_degree};
}

bool is_connected(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.w);
    adj[e.w].push_back(e.u);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

MultiGraph subdivide_edge(const MultiGraph& g, int u, int w) {
  if (g.multiplicity(u, w) == 0)
    throw std::invalid_argument("subdivide_edge: no edge {" + std::to_string(u) +
                                "," + std::to_string(w) + "}");
  const int fresh = g.vertex_count();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Edge copy = e;
    if (std::pair(e.u, e.w) == std::pair(std::min(u, w), std::max(u, w)))
      copy.mult -= 1;
    if (copy.mult > 0) edges.push_back(copy);
  }
  edges.push_back(Edge{std::min(u, fresh), std::max(u, fresh), 1});
  edges.push_back(Edge{std::min(w, fresh), std::max(w, fresh), 1});
  std::vector<std::string> labels = g.labels();
  if (!labels.empty()) labels.push_back("");
  return MultiGraph(fresh + 1, std::move(edges), std::move(labels));
}

MultiGraph smooth_degree_two(const MultiGraph& g) {
  MultiGraph cur = g;
  for (;;) {
    int target = -1;
    std::pair<int, int> ends{-1, -1};
    for (int v = 0; v < cur.vertex_count() && target < 0; ++v) {
      if (cur.degree(v) != 2) continue;
      auto nbrs = cur.neighbors(v);
      if (nbrs.size() == 2) {  // two distinct neighbors, both multiplicity 1
        target = v;
        ends = {nbrs[0], nbrs[1]};
      }
    }
    if (target < 0) return cur;

    std::vector<Edge> edges;
    auto map_vertex = [target](int v) { return v > target ? v - 1 : v; };
    for (const Edge& e : cur.edges()) {
      if (e.u == target || e.w == target) continue;
      edges.push_back(Edge{map_vertex(e.u), map_vertex(e.w), e.mult});
    }
    edges.push_back(Edge{std::min(map_vertex(ends.first), map_vertex(ends.second)),
                         std::max(map_vertex(ends.first), map_vertex(ends.second)), 1});
    std::vector<std::string> labels = cur.labels();
    if (!labels.empty()) labels.erase(labels.begin() + target);
    cur = MultiGraph(cur.vertex_count() - 1, std::move(edges), std::move(labels));
  }
}

MultiGraph edge_subgraph(const MultiGraph& g, const std::vector<VertexPair>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, w] : pairs) {
    if (g.multiplicity(u, w) == 0)
      throw std::invalid_argument("edge_subgraph: pair {" + std::to_string(u) + "," +
                                  std::to_string(w) + "} is not an edge");
    edges.push_back(Edge{std::min(u, w), std::max(u, w), 1});
  }
  return MultiGraph(g.vertex_count(), std::move(edges), g.labels());
}

MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<int>& vertices) {
  if (!std::is_sorted(vertices.begin(), vertices.end()) ||
      std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("induced_subgraph: vertex list must be strictly ascending");
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i], g.vertex_count());
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.w] >= 0)
      edges.push_back(Edge{index[e.u], index[e.w], e.mult});
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (int v : vertices) labels.push_back(g.labels()[v]);
  return MultiGraph(static_cast<int>(vertices.size()), std::move(edges), std::move(labels));
}

}  // namespace chirality
