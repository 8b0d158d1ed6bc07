#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chirality {

/// One parallel class of an undirected edge: endpoints u < w, multiplicity >= 1.
struct Edge {
  int u = 0;
  int w = 0;
  int mult = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

using VertexPair = std::pair<int, int>;

/// Loop-free undirected multigraph on vertex ids [0, n).
///
/// Values are immutable after construction; every operation below returns a
/// fresh graph, so values can be shared freely between workers. Labels are
/// display-only and never take part in equality or isomorphism.
class MultiGraph {
public:
  MultiGraph() = default;
  MultiGraph(int vertex_count, std::vector<Edge> edges,
             std::vector<std::string> labels = {});

  /// Builds from raw endpoint pairs; repeated pairs accumulate multiplicity.
  /// Rejects self-loops and out-of-range endpoints.
  static MultiGraph from_edge_list(int vertex_count,
                                   const std::vector<VertexPair>& pairs);

  int vertex_count() const { return n_; }

  /// Number of distinct adjacent pairs (edges of the simple skeleton).
  int pair_count() const { return static_cast<int>(edges_.size()); }

  /// Total edge count ||G||: sum of multiplicities.
  int edge_count() const;

  /// Parallel classes sorted by (u, w).
  const std::vector<Edge>& edges() const { return edges_; }

  /// Distinct pairs in sorted order, multiplicities dropped.
  std::vector<VertexPair> pairs() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;

  int multiplicity(int u, int w) const;
  bool adjacent(int u, int w) const { return multiplicity(u, w) > 0; }
  bool is_simple() const;

  /// Degree counts edge multiplicities.
  int degree(int v) const;

  /// Distinct neighbors of v, ascending.
  std::vector<int> neighbors(int v) const;

  MultiGraph with_labels(std::vector<std::string> labels) const;

  /// Same adjacencies with every multiplicity clamped to 1.
  MultiGraph skeleton() const;

  /// Structural equality; labels are ignored.
  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;  // sorted by (u, w), u < w, mult >= 1
  std::vector<std::string> labels_;
};

/// Complement of a simple graph; rejects non-simple input.
MultiGraph complement(const MultiGraph& g);

/// (degree sequence sorted descending, minimum degree). Empty graph -> ({}, 0).
std::pair<std::vector<int>, int> degree_info(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

/// Replaces one copy of {u, w} by a 2-path through a new vertex (id n).
MultiGraph subdivide_edge(const MultiGraph& g, int u, int w);

/// Repeatedly replaces each degree-2 vertex with two distinct neighbors u, w
/// by a direct edge {u, w} (multiplicity accumulates). A degree-2 vertex whose
/// incident edges go to a single neighbor is left in place: smoothing it would
/// create a loop.
MultiGraph smooth_degree_two(const MultiGraph& g);

/// Subgraph keeping the full vertex set and one copy of each listed pair.
MultiGraph edge_subgraph(const MultiGraph& g, const std::vector<VertexPair>& pairs);

/// Induced subgraph on `vertices` (strictly ascending); result vertex i is
/// vertices[i] in g. Multiplicities are kept.
MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<int>& vertices);

}  // namespace chirality
