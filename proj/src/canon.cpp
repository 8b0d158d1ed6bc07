#include "chirality/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "chirality/codec.hpp"
#include "chirality/errors.hpp"

namespace chirality {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
      throw std::invalid_argument("malformed permutation: image is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> image(image_.size());
  for (int v = 0; v < size(); ++v) image[v] = image_[other.image_[v]];
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> image(image_.size());
  for (int v = 0; v < size(); ++v) image[image_[v]] = v;
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v)
    if (image_[v] != v) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int v = 0; v < size(); ++v)
    if (image_[image_[v]] != v) return false;
  return true;
}

int Permutation::moved_count() const {
  int moved = 0;
  for (int v = 0; v < size(); ++v)
    if (image_[v] != v) ++moved;
  return moved;
}

namespace {

// Flat multiplicity matrix; n is small throughout (graphs of interest have
// at most ~10 vertices, graph6 caps the codec at 62).
struct AdjMatrix {
  int n = 0;
  std::vector<int> m;

  explicit AdjMatrix(const MultiGraph& g) : n(g.vertex_count()), m(n * n, 0) {
    for (const Edge& e : g.edges()) {
      m[e.u * n + e.w] = e.mult;
      m[e.w * n + e.u] = e.mult;
    }
  }
  int at(int u, int w) const { return m[u * n + w]; }
};

// Equitable-partition refinement. Colors are class ids 0..k-1; classes are
// kept in a canonical order because each round renumbers by sorted signature
// and the signature starts with the previous color.
std::vector<int> refine_colors(const AdjMatrix& adj, std::vector<int> colors) {
  const int n = adj.n;
  using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
  for (;;) {
    std::vector<std::pair<Signature, int>> sigs;
    sigs.reserve(n);
    for (int v = 0; v < n; ++v) {
      Signature sig{colors[v], {}};
      for (int w = 0; w < n; ++w)
        if (adj.at(v, w) > 0) sig.second.emplace_back(colors[w], adj.at(v, w));
      std::sort(sig.second.begin(), sig.second.end());
      sigs.emplace_back(std::move(sig), v);
    }
    std::sort(sigs.begin(), sigs.end());
    std::vector<int> next(n, 0);
    int color = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sigs[i].first != sigs[i - 1].first) ++color;
      next[sigs[i].second] = color;
    }
    if (next == colors) return colors;
    colors = std::move(next);
  }
}

int distinct_count(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

// Individualization-refinement search for the canonical labeling. The leaf
// certificate is the upper triangle of the relabeled multiplicity matrix; the
// canonical labeling is the lexicographic minimum over all leaves. Leaves that
// tie with the current best yield automorphisms, which prune sibling branches
// that merely revisit an equivalent subtree.
class CanonSearch {
public:
  explicit CanonSearch(const AdjMatrix& adj) : adj_(adj) {}

  Permutation run() {
    std::vector<int> start(adj_.n, 0);
    path_.clear();
    recurse(refine_colors(adj_, std::move(start)));
    return Permutation(best_labels_);
  }

private:
  static constexpr std::size_t kMaxStoredAutomorphisms = 64;

  void recurse(std::vector<int> colors) {
    const int n = adj_.n;
    if (distinct_count(colors) == n) {
      leaf(colors);
      return;
    }
    // Target cell: first largest cell in color order.
    std::vector<int> cell_size(distinct_count(colors), 0);
    for (int c : colors) ++cell_size[c];
    int target = 0;
    for (int c = 0; c < static_cast<int>(cell_size.size()); ++c)
      if (cell_size[c] > cell_size[target]) target = c;

    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      if (pruned_by_automorphism(v, tried)) continue;
      tried.push_back(v);
      std::vector<int> child(n);
      for (int u = 0; u < n; ++u) child[u] = 2 * colors[u] + 1;
      child[v] -= 1;
      path_.push_back(v);
      recurse(refine_colors(adj_, std::move(child)));
      path_.pop_back();
    }
  }

  bool pruned_by_automorphism(int v, const std::vector<int>& tried) const {
    for (const auto& gamma : automorphisms_) {
      bool fixes_path = true;
      for (int p : path_)
        if (gamma[p] != p) {
          fixes_path = false;
          break;
        }
      if (!fixes_path) continue;
      if (std::find(tried.begin(), tried.end(), gamma[v]) != tried.end()) return true;
    }
    return false;
  }

  void leaf(const std::vector<int>& labels) {
    const int n = adj_.n;
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[labels[v]] = v;
    std::vector<int> cert;
    cert.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) cert.push_back(adj_.at(inv[i], inv[j]));

    if (best_labels_.empty() && n > 0) {
      best_cert_ = std::move(cert);
      best_labels_ = labels;
      return;
    }
    if (n == 0) {
      best_labels_ = labels;
      return;
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_labels_ = labels;
    } else if (cert == best_cert_ && automorphisms_.size() < kMaxStoredAutomorphisms) {
      std::vector<int> best_inv(n);
      for (int v = 0; v < n; ++v) best_inv[best_labels_[v]] = v;
      std::vector<int> gamma(n);
      bool id = true;
      for (int v = 0; v < n; ++v) {
        gamma[v] = best_inv[labels[v]];
        id = id && gamma[v] == v;
      }
      if (!id && std::find(automorphisms_.begin(), automorphisms_.end(), gamma) ==
                     automorphisms_.end())
        automorphisms_.push_back(std::move(gamma));
    }
  }

  const AdjMatrix& adj_;
  std::vector<int> best_cert_;
  std::vector<int> best_labels_;
  std::vector<int> path_;
  std::vector<std::vector<int>> automorphisms_;
};

Permutation canonical_labeling(const MultiGraph& g) {
  AdjMatrix adj(g);
  if (adj.n == 0) return Permutation(std::vector<int>{});
  return CanonSearch(adj).run();
}

}  // namespace

std::string canonical_form(const MultiGraph& g) {
  const MultiGraph canon = relabel(g.with_labels({}), canonical_labeling(g));
  std::string out;
  if (canon.vertex_count() <= 62) {
    out = encode_graph6(canon.skeleton());
  } else {
    out = "n=" + std::to_string(canon.vertex_count()) + ":";
    for (const Edge& e : canon.edges())
      out += std::to_string(e.u) + "-" + std::to_string(e.w) + ",";
  }
  if (!canon.is_simple()) {
    out += ";";
    for (const Edge& e : canon.edges())
      if (e.mult > 1)
        out += std::to_string(e.u) + "-" + std::to_string(e.w) + ":" +
               std::to_string(e.mult) + ",";
  }
  return out;
}

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.pair_count() != b.pair_count() || a.edge_count() != b.edge_count())
    return false;
  if (degree_info(a).first != degree_info(b).first) return false;
  return canonical_form(a) == canonical_form(b);
}

bool is_automorphism(const MultiGraph& g, const Permutation& p) {
  if (p.size() != g.vertex_count())
    throw std::invalid_argument("malformed permutation: wrong degree");
  for (const Edge& e : g.edges())
    if (g.multiplicity(p(e.u), p(e.w)) != e.mult) return false;
  return true;
}

MultiGraph relabel(const MultiGraph& g, const Permutation& p) {
  if (p.size() != g.vertex_count())
    throw std::invalid_argument("malformed permutation: wrong degree");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.push_back(Edge{p(e.u), p(e.w), e.mult});
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) labels[p(v)] = g.labels()[v];
  }
  return MultiGraph(g.vertex_count(), std::move(edges), std::move(labels));
}

namespace {

// Backtracking enumeration of every color-respecting, adjacency-preserving
// permutation. Complete because automorphisms preserve refined colors.
class AutSearch {
public:
  AutSearch(const AdjMatrix& adj, std::uint64_t cap) : adj_(adj), cap_(cap) {
    colors_ = refine_colors(adj_, std::vector<int>(adj_.n, 0));
    std::vector<int> cell_size(distinct_count(colors_), 0);
    for (int c : colors_) ++cell_size[c];
    order_.resize(adj_.n);
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      return std::tuple(cell_size[colors_[a]], colors_[a], a) <
             std::tuple(cell_size[colors_[b]], colors_[b], b);
    });
    image_.assign(adj_.n, -1);
    used_.assign(adj_.n, 0);
  }

  // Flat buffer of images, one block of n entries per element.
  std::pair<std::vector<std::uint8_t>, std::uint64_t> run() {
    if (adj_.n > 255)
      throw resource_error("automorphism search supports at most 255 vertices");
    extend(0);
    return {std::move(found_), count_};
  }

private:
  void extend(int depth) {
    const int n = adj_.n;
    if (depth == n) {
      if (++count_ > cap_)
        throw resource_error("automorphism group order exceeds cap " +
                             std::to_string(cap_));
      for (int v = 0; v < n; ++v) found_.push_back(static_cast<std::uint8_t>(image_[v]));
      return;
    }
    const int v = order_[depth];
    for (int w = 0; w < n; ++w) {
      if (used_[w] || colors_[w] != colors_[v]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int u = order_[d];
        ok = adj_.at(v, u) == adj_.at(w, image_[u]);
      }
      if (!ok) continue;
      image_[v] = w;
      used_[w] = 1;
      extend(depth + 1);
      used_[w] = 0;
      image_[v] = -1;
    }
  }

  const AdjMatrix& adj_;
  std::uint64_t cap_;
  std::vector<int> colors_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::vector<std::uint8_t> found_;
  std::uint64_t count_ = 0;
};

std::set<std::vector<int>> closure_of(const std::vector<Permutation>& gens, int n,
                                      std::uint64_t stop_at) {
  std::set<std::vector<int>> known;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  known.insert(id);
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty() && known.size() < stop_at) {
    std::vector<std::vector<int>> next;
    for (const auto& elem : frontier) {
      for (const Permutation& gen : gens) {
        std::vector<int> prod(n);
        for (int v = 0; v < n; ++v) prod[v] = gen(elem[v]);
        if (known.insert(prod).second) next.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
  }
  return known;
}

}  // namespace

AutGroup automorphism_group(const MultiGraph& g, std::uint64_t order_cap) {
  const int n = g.vertex_count();
  AdjMatrix adj(g);
  auto [flat, count] = AutSearch(adj, order_cap).run();

  // Sort element images lexicographically for a deterministic generator pick.
  std::vector<std::uint64_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  auto block = [&](std::uint64_t i, int v) -> int { return flat[i * n + v]; };
  std::sort(idx.begin(), idx.end(), [&](std::uint64_t a, std::uint64_t b) {
    for (int v = 0; v < n; ++v)
      if (block(a, v) != block(b, v)) return block(a, v) < block(b, v);
    return false;
  });

  AutGroup group;
  group.degree = n;
  group.order = count;
  std::set<std::vector<int>> closed;
  for (std::uint64_t i : idx) {
    std::vector<int> image(n);
    bool id = true;
    for (int v = 0; v < n; ++v) {
      image[v] = block(i, v);
      id = id && image[v] == v;
    }
    if (id) continue;
    if (closed.empty() || !closed.count(image)) {
      group.generators.emplace_back(image);
      closed = closure_of(group.generators, n, count);
      if (closed.size() == count) break;
    }
  }
  return group;
}

std::vector<Permutation> AutGroup::elements() const {
  auto closed = closure_of(generators, degree, order);
  std::vector<Permutation> out;
  out.reserve(closed.size());
  for (const auto& image : closed) out.emplace_back(image);
  return out;  // std::set iterates lexicographically
}

std::vector<VertexPair> apply_to_pairs(const Permutation& p,
                                       const std::vector<VertexPair>& pairs) {
  std::vector<VertexPair> out;
  out.reserve(pairs.size());
  for (auto [u, w] : pairs)
    out.emplace_back(std::min(p(u), p(w)), std::max(p(u), p(w)));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_invariant_edge_set(const MultiGraph& g, const AutGroup& aut,
                           const std::vector<VertexPair>& pairs) {
  std::vector<VertexPair> sorted;
  sorted.reserve(pairs.size());
  for (auto [u, w] : pairs) {
    if (g.multiplicity(u, w) == 0)
      throw std::invalid_argument("is_invariant_edge_set: pair set is not a subset of E(G)");
    sorted.emplace_back(std::min(u, w), std::max(u, w));
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Permutation& gen : aut.generators)
    if (apply_to_pairs(gen, sorted) != sorted) return false;
  return true;
}

}  // namespace chirality
