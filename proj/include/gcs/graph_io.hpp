#ifndef GCS_GRAPH_IO_HPP
#define GCS_GRAPH_IO_HPP

// Two interchangeable graph file formats.
//
// Text:  a vertex section (whitespace-separated identifiers), then ";", then
//        edge declarations "id: src -> dst" separated by ";".
// JSON:  {"vertices": ["v1", ...], "edges": [{"id": ..., "src": ..., "dst": ...}, ...]}
//
// Serialization is canonical, so parse/serialize round-trips are bit-exact.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gcs/errors.hpp"
#include "gcs/graph.hpp"

namespace gcs {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

inline bool is_single_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == ';' || c == ':') return false;
  }
  return true;
}

} // namespace detail

inline Graph parse_graph_text(std::string_view text) {
  auto chunks = detail::split(text, ";");
  std::vector<std::string> vertices;
  for (std::string_view tok : detail::split(chunks.front(), " ")) {
    tok = detail::trim(tok);
    if (tok.empty()) continue;
    if (!detail::is_single_token(tok)) throw ParseError("bad vertex identifier '" + std::string(tok) + "'");
    vertices.emplace_back(tok);
  }
  std::vector<EdgeDecl> edges;
  for (std::size_t i = 1; i < chunks.size(); ++i) {
    std::string_view chunk = detail::trim(chunks[i]);
    if (chunk.empty()) continue;
    std::size_t colon = chunk.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("edge declaration missing ':': '" + std::string(chunk) + "'");
    }
    std::string_view id = detail::trim(chunk.substr(0, colon));
    std::string_view rest = chunk.substr(colon + 1);
    std::size_t arrow = rest.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError("edge declaration missing '->': '" + std::string(chunk) + "'");
    }
    std::string_view src = detail::trim(rest.substr(0, arrow));
    std::string_view dst = detail::trim(rest.substr(arrow + 2));
    if (!detail::is_single_token(id) || !detail::is_single_token(src) || !detail::is_single_token(dst)) {
      throw ParseError("malformed edge declaration '" + std::string(chunk) + "'");
    }
    edges.push_back({std::string(id), std::string(src), std::string(dst)});
  }
  return Graph(std::move(vertices), std::move(edges));
}

inline std::string serialize_graph_text(const Graph& g) {
  std::string out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v > 0) out += ' ';
    out += g.vertex_id(v);
  }
  out += " ;";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    out += ' ';
    out += g.edge_id(e) + ": " + g.vertex_id(g.source(e)) + " -> " + g.vertex_id(g.range(e));
    if (e + 1 < g.edge_count()) out += " ;";
  }
  return out;
}

inline Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
      !j["vertices"].is_array() || !j["edges"].is_array()) {
    throw ParseError("graph JSON must be an object with \"vertices\" and \"edges\" arrays");
  }
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("graph JSON vertices must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<EdgeDecl> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("src") || !e.contains("dst")) {
      throw ParseError("graph JSON edges must be objects with id/src/dst");
    }
    edges.push_back({e["id"].get<std::string>(), e["src"].get<std::string>(), e["dst"].get<std::string>()});
  }
  return Graph(std::move(vertices), std::move(edges));
}

inline std::string serialize_graph_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.vertex_id(v));
  j["edges"] = nlohmann::json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    j["edges"].push_back({{"id", g.edge_id(e)},
                          {"src", g.vertex_id(g.source(e))},
                          {"dst", g.vertex_id(g.range(e))}});
  }
  return j.dump();
}

/// Accepts either format; JSON input is recognized by a leading '{'.
inline Graph parse_graph(std::string_view text) {
  std::string_view t = detail::trim(text);
  if (t.empty()) throw ParseError("empty graph description");
  if (t.front() == '{') return parse_graph_json(t);
  return parse_graph_text(t);
}

} // namespace gcs

#endif // GCS_GRAPH_IO_HPP
