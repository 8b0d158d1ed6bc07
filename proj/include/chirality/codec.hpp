#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chirality/multigraph.hpp"

namespace chirality {

/// Decode failure carrying the byte offset where the input stopped making sense.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

enum class GraphFormat { Graph6, Json };

/// graph6 printable encoding; simple graphs with at most 62 vertices.
std::string encode_graph6(const MultiGraph& g);

/// Accepts the optional ">>graph6<<" header and one trailing newline.
MultiGraph decode_graph6(std::string_view text);

/// {"n": ..., "edges": [[u, w, mult], ...], "labels": [...]} with fields in
/// fixed order; the authoritative multigraph format.
std::string encode_json(const MultiGraph& g);
MultiGraph decode_json(std::string_view text);

std::string encode(const MultiGraph& g, GraphFormat format);
MultiGraph decode(std::string_view text, GraphFormat format);

}  // namespace chirality
