#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chirality/multigraph.hpp"

namespace chirality {

/// Named graphs used throughout the classification pipelines. Each name
/// resolves to exactly one graph up to isomorphism. Moebius ladders are
/// parametrized separately via moebius_ladder(n).
enum class ZooName {
  K5,
  K6,
  K7,
  K33,
  Gamma7,
  Gamma8,
  E,
  EPrime,
  F,
  FPrime,
  Fig6A,
  Fig6B,
  Fig6C,
  Fig6D,
};

MultiGraph zoo(ZooName name);

/// M_n: 2n-cycle 1..2n plus the n rungs {i, i+n}. n >= 1.
MultiGraph moebius_ladder(int n);

/// Lowercase lookup: "k5", "k33", "gamma7", "eprime", "fig6d", "m3", "m11", ...
std::optional<MultiGraph> zoo_by_name(std::string_view name);

/// All fixed names plus "m<n>", for CLI help.
std::vector<std::string> zoo_names();

/// The hexagon a1 a2 a3 b1 b2 b3 of Gamma7 or Gamma8, as sorted vertex pairs.
std::vector<VertexPair> gamma_hexagon(ZooName name);

}  // namespace chirality
