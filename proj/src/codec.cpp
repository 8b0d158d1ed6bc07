#include "chirality/codec.hpp"

#include <nlohmann/json.hpp>

namespace chirality {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

std::string encode_graph6(const MultiGraph& g) {
  if (!g.is_simple())
    throw std::domain_error("graph6 encodes simple graphs only");
  const int n = g.vertex_count();
  if (n > 62)
    throw std::domain_error("graph6 encoding supports at most 62 vertices here");

  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bits = 0;
  int packed = 0;
  // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (int w = 1; w < n; ++w) {
    for (int u = 0; u < w; ++u) {
      packed = (packed << 1) | (g.adjacent(u, w) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(packed + 63));
        bits = 0;
        packed = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((packed << (6 - bits)) + 63));
  return out;
}

MultiGraph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    base = kGraph6Header.size();
    text.remove_prefix(kGraph6Header.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);

  if (text.empty()) throw parse_error("empty graph6 input", base);
  const unsigned char first = static_cast<unsigned char>(text[0]);
  if (first == '~')
    throw parse_error("graph6 vertex counts above 62 are not supported", base);
  if (first < 63 || first > 125)
    throw parse_error("invalid graph6 vertex-count byte", base);
  const int n = first - 63;

  const int nbits = n * (n - 1) / 2;
  const int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(text.size()) - 1 < nbytes)
    throw parse_error("truncated graph6 body", base + text.size());
  if (static_cast<int>(text.size()) - 1 > nbytes)
    throw parse_error("trailing bytes after graph6 body", base + 1 + nbytes);

  std::vector<VertexPair> pairs;
  int bit_index = 0;
  for (int w = 1; w < n; ++w) {
    for (int u = 0; u < w; ++u, ++bit_index) {
      const int byte_pos = 1 + bit_index / 6;
      const unsigned char c = static_cast<unsigned char>(text[byte_pos]);
      if (c < 63 || c > 126)
        throw parse_error("invalid graph6 body byte", base + byte_pos);
      const int bit = (c - 63) >> (5 - bit_index % 6) & 1;
      if (bit) pairs.emplace_back(u, w);
    }
  }
  // Padding bits must be zero.
  if (nbits % 6 != 0) {
    const unsigned char last = static_cast<unsigned char>(text[nbytes]) - 63;
    if ((last & ((1 << (6 - nbits % 6)) - 1)) != 0)
      throw parse_error("nonzero padding bits in graph6 body", base + nbytes);
  }
  return MultiGraph::from_edge_list(n, pairs);
}

std::string encode_json(const MultiGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.w, e.mult});
  j["edges"] = std::move(edges);
  j["labels"] = g.labels();
  return j.dump();
}

MultiGraph decode_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid json: ") + e.what(),
                      e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw parse_error("graph json must be an object with \"n\" and \"edges\"", 0);
  if (!j["n"].is_number_integer())
    throw parse_error("\"n\" must be an integer", 0);
  const int n = j["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& entry : j["edges"]) {
    if (!entry.is_array() || entry.size() != 3)
      throw parse_error("each edge must be [u, w, mult]", 0);
    edges.push_back(Edge{entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>()});
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return MultiGraph(n, std::move(edges), std::move(labels));
}

std::string encode(const MultiGraph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? encode_graph6(g) : encode_json(g);
}

MultiGraph decode(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? decode_graph6(text) : decode_json(text);
}

}  // namespace chirality
