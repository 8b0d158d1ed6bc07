#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "chirality/multigraph.hpp"

namespace chirality {

/// A bijection on [0, n) stored as its image array.
class Permutation {
public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  const std::vector<int>& image() const { return image_; }

  /// (a.compose(b))(v) == a(b(v)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  bool is_identity() const;
  /// True when p∘p is the identity; the identity itself counts.
  bool is_involution() const;
  int moved_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> image_;
};

inline constexpr std::uint64_t kDefaultAutOrderCap = 10'000'000;

/// Automorphism group given by generators; elements() lazily expands the
/// closure (identity included, sorted lexicographically by image).
struct AutGroup {
  int degree = 0;                        // number of vertices acted on
  std::vector<Permutation> generators;   // identity omitted; empty => trivial
  std::uint64_t order = 1;

  std::vector<Permutation> elements() const;
};

/// Label-independent byte string; equal strings iff the multigraphs are
/// isomorphic (respecting multiplicities). Stable across runs and platforms.
std::string canonical_form(const MultiGraph& g);

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b);

/// Full automorphism group; throws resource_error when the group order
/// exceeds `order_cap`.
AutGroup automorphism_group(const MultiGraph& g,
                            std::uint64_t order_cap = kDefaultAutOrderCap);

/// Adjacency-with-multiplicity preservation check.
bool is_automorphism(const MultiGraph& g, const Permutation& p);

/// Relabels: vertex v of g becomes p(v).
MultiGraph relabel(const MultiGraph& g, const Permutation& p);

/// Image of a pair set under p, normalized to (min, max) and sorted.
std::vector<VertexPair> apply_to_pairs(const Permutation& p,
                                       const std::vector<VertexPair>& pairs);

/// True iff every group element maps the pair set to itself setwise
/// (checking the generators suffices). `pairs` must be edges of g.
bool is_invariant_edge_set(const MultiGraph& g, const AutGroup& aut,
                           const std::vector<VertexPair>& pairs);

}  // namespace chirality
