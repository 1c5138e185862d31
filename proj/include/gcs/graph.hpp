#ifndef GCS_GRAPH_HPP
#define GCS_GRAPH_HPP

// Finite directed multigraphs with named vertices and edges. The declaration
// order of vertices and edges is part of the value: it fixes the orderings
// used for special-edge selection, path enumeration and serialization.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcs/errors.hpp"

namespace gcs {

struct EdgeDecl {
  std::string id;
  std::string src;
  std::string dst;
};

class Graph {
public:
  Graph(std::vector<std::string> vertex_ids, std::vector<EdgeDecl> edge_decls) {
    vertex_ids_ = std::move(vertex_ids);
    for (std::size_t v = 0; v < vertex_ids_.size(); ++v) {
      if (!vertex_index_.emplace(vertex_ids_[v], v).second) {
        throw UnknownIdError("duplicate vertex identifier '" + vertex_ids_[v] + "'");
      }
    }
    for (auto& decl : edge_decls) {
      const std::size_t e = edge_ids_.size();
      if (vertex_index_.count(decl.id) != 0) {
        throw UnknownIdError("identifier '" + decl.id + "' is both a vertex and an edge");
      }
      if (!edge_index_.emplace(decl.id, e).second) {
        throw UnknownIdError("duplicate edge identifier '" + decl.id + "'");
      }
      auto s = vertex_index_.find(decl.src);
      auto r = vertex_index_.find(decl.dst);
      if (s == vertex_index_.end()) {
        throw UnknownIdError("edge '" + decl.id + "' references undeclared vertex '" + decl.src + "'");
      }
      if (r == vertex_index_.end()) {
        throw UnknownIdError("edge '" + decl.id + "' references undeclared vertex '" + decl.dst + "'");
      }
      edge_ids_.push_back(std::move(decl.id));
      source_.push_back(s->second);
      range_.push_back(r->second);
    }
    out_edges_.resize(vertex_ids_.size());
    in_edges_.resize(vertex_ids_.size());
    for (std::size_t e = 0; e < edge_ids_.size(); ++e) {
      out_edges_[source_[e]].push_back(e);
      in_edges_[range_[e]].push_back(e);
    }
  }

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edge_ids_.size(); }

  const std::string& vertex_id(std::size_t v) const { return vertex_ids_[v]; }
  const std::string& edge_id(std::size_t e) const { return edge_ids_[e]; }

  std::optional<std::size_t> find_vertex(std::string_view id) const {
    auto it = vertex_index_.find(std::string(id));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_edge(std::string_view id) const {
    auto it = edge_index_.find(std::string(id));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t vertex(std::string_view id) const {
    auto v = find_vertex(id);
    if (!v) throw UnknownIdError("unknown vertex '" + std::string(id) + "'");
    return *v;
  }
  std::size_t edge(std::string_view id) const {
    auto e = find_edge(id);
    if (!e) throw UnknownIdError("unknown edge '" + std::string(id) + "'");
    return *e;
  }

  std::size_t source(std::size_t e) const { return source_[e]; }
  std::size_t range(std::size_t e) const { return range_[e]; }

  /// Edges with source v, ascending in the edge ordering.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_edges_[v]; }
  /// Edges with range v, ascending in the edge ordering.
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_edges_[v]; }

  std::size_t outdegree(std::size_t v) const { return out_edges_[v].size(); }
  std::size_t indegree(std::size_t v) const { return in_edges_[v].size(); }

  bool is_sink(std::size_t v) const { return out_edges_[v].empty(); }
  bool is_rigid_source(std::size_t v) const { return in_edges_[v].empty(); }
  bool is_isolated(std::size_t v) const { return is_sink(v) && is_rigid_source(v); }
  bool is_loop(std::size_t e) const { return source_[e] == range_[e]; }

  bool has_loop() const {
    for (std::size_t e = 0; e < edge_count(); ++e)
      if (is_loop(e)) return true;
    return false;
  }

  std::vector<std::size_t> isolated_vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertex_count(); ++v)
      if (is_isolated(v)) out.push_back(v);
    return out;
  }

  bool has_isolated_vertex() const { return !isolated_vertices().empty(); }

  /// The least outgoing edge of a non-sink vertex; the canonical choice that
  /// pins down the rewriting system's irreducible monomials.
  std::optional<std::size_t> special_edge(std::size_t v) const {
    if (out_edges_[v].empty()) return std::nullopt;
    return out_edges_[v].front();
  }

  bool structurally_equal(const Graph& other) const {
    return vertex_ids_ == other.vertex_ids_ && edge_ids_ == other.edge_ids_ &&
           source_ == other.source_ && range_ == other.range_;
  }

private:
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<std::size_t> source_;
  std::vector<std::size_t> range_;
  std::map<std::string, std::size_t, std::less<>> vertex_index_;
  std::map<std::string, std::size_t, std::less<>> edge_index_;
  std::vector<std::vector<std::size_t>> out_edges_;
  std::vector<std::vector<std::size_t>> in_edges_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline void require_no_isolated(const Graph& g, std::string_view what) {
  auto iso = g.isolated_vertices();
  if (!iso.empty()) {
    std::string msg(what);
    msg += ": graph has isolated vertices:";
    for (std::size_t v : iso) msg += " " + g.vertex_id(v);
    throw IsolatedVertexError(msg);
  }
}

// ---------------------------------------------------------------------------
// Paths

/// A finite path of edges. The empty path sits at its anchor vertex; for a
/// nonempty path the anchor equals the source of the first edge, so that
/// structural equality of Path values is semantic equality.
struct Path {
  std::size_t anchor = 0;
  std::vector<std::size_t> edges;

  bool empty() const { return edges.empty(); }
  std::size_t length() const { return edges.size(); }

  auto operator<=>(const Path&) const = default;
};

inline Path empty_path(std::size_t v) { return Path{v, {}}; }

inline Path make_path(const Graph& g, std::vector<std::size_t> edges) {
  if (edges.empty()) throw Error("make_path requires at least one edge; use empty_path");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.range(edges[i]) != g.source(edges[i + 1])) {
      throw Error("edge sequence is not a path: range(" + g.edge_id(edges[i]) +
                  ") != source(" + g.edge_id(edges[i + 1]) + ")");
    }
  }
  std::size_t anchor = g.source(edges.front());
  return Path{anchor, std::move(edges)};
}

inline std::size_t path_source(const Graph& g, const Path& p) {
  return p.empty() ? p.anchor : g.source(p.edges.front());
}

inline std::size_t path_range(const Graph& g, const Path& p) {
  return p.empty() ? p.anchor : g.range(p.edges.back());
}

inline bool is_valid_path(const Graph& g, const Path& p) {
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
    if (g.range(p.edges[i]) != g.source(p.edges[i + 1])) return false;
  }
  if (!p.empty() && p.anchor != g.source(p.edges.front())) return false;
  return true;
}

/// Concatenation a.b; requires range(a) == source(b).
inline Path concat(const Graph& g, const Path& a, const Path& b) {
  if (path_range(g, a) != path_source(g, b)) {
    throw Error("cannot concatenate: range/source mismatch");
  }
  if (a.empty()) return b;
  Path out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

/// True when `prefix` is an initial segment of `p` (for the empty prefix this
/// requires its anchor to be the source of p).
inline bool is_prefix(const Graph& g, const Path& prefix, const Path& p) {
  if (prefix.length() > p.length()) return false;
  if (prefix.empty()) return prefix.anchor == path_source(g, p);
  return std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin());
}

/// The path left after removing `prefix` from the front of `p`.
inline Path strip_prefix(const Graph& g, const Path& prefix, const Path& p) {
  std::vector<std::size_t> rest(p.edges.begin() + static_cast<std::ptrdiff_t>(prefix.length()),
                                p.edges.end());
  if (rest.empty()) return empty_path(path_range(g, p));
  return make_path(g, std::move(rest));
}

// ---------------------------------------------------------------------------
// Structural predicates

struct StructuralSummary {
  std::vector<std::size_t> indegree;
  std::vector<std::size_t> outdegree;
  std::vector<std::size_t> sinks;
  std::vector<std::size_t> rigid_sources;
  std::vector<std::size_t> loops;
  std::vector<std::size_t> isolated;
  bool connected = false;
  bool has_path_of_length_two = false;
};

/// Connectedness in the undirected sense: between any two vertices there is a
/// chain of adjacent (v -> w or w -> v) vertices. A one-vertex graph counts
/// as connected.
inline bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    auto visit = [&](std::size_t w) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    };
    for (std::size_t e : g.out_edges(v)) visit(g.range(e));
    for (std::size_t e : g.in_edges(v)) visit(g.source(e));
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

inline StructuralSummary structural_predicates(const Graph& g) {
  StructuralSummary s;
  const std::size_t n = g.vertex_count();
  s.indegree.resize(n);
  s.outdegree.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    s.indegree[v] = g.indegree(v);
    s.outdegree[v] = g.outdegree(v);
    if (g.is_sink(v)) s.sinks.push_back(v);
    if (g.is_rigid_source(v)) s.rigid_sources.push_back(v);
    if (g.is_isolated(v)) s.isolated.push_back(v);
    if (!g.is_sink(v) && !g.is_rigid_source(v)) s.has_path_of_length_two = true;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) s.loops.push_back(e);
  }
  s.connected = is_connected(g);
  return s;
}

/// Entry (i,j) counts the edges with source v_i and range v_j.
inline std::vector<std::vector<std::int64_t>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<std::int64_t>> a(g.vertex_count(),
                                           std::vector<std::int64_t>(g.vertex_count(), 0));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    a[g.source(e)][g.range(e)] += 1;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Path enumeration

/// All paths of length 0..max_len. Level 0 lists one empty path per vertex in
/// vertex order; level k+1 extends each level-k path by the outgoing edges of
/// its range, in edge order.
inline std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len) {
  std::vector<Path> all;
  std::vector<Path> level;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) level.push_back(empty_path(v));
  all.insert(all.end(), level.begin(), level.end());
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : level) {
      for (std::size_t e : g.out_edges(path_range(g, p))) {
        Path q = p;
        if (q.empty()) q.anchor = g.source(e);
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
    if (level.empty()) break;
  }
  return all;
}

// ---------------------------------------------------------------------------
// Named families

enum class Family {
  Ln,            // one vertex, n loops
  DisjointLoops, // n vertices, one loop each
  C2,            // the 2-cycle
  P2,            // the path v1 -> v2 -> v3
  Son,           // one source, n edges to n distinct sinks
  IntoStar,      // n distinct sources, one edge each into a common vertex
  Kn,            // complete digraph: one edge i -> j for every i != j
  KnComplement,  // n vertices, no edges
};

inline std::optional<Family> family_from_string(std::string_view s) {
  if (s == "Ln") return Family::Ln;
  if (s == "DisjointLoops") return Family::DisjointLoops;
  if (s == "C2") return Family::C2;
  if (s == "P2") return Family::P2;
  if (s == "Son") return Family::Son;
  if (s == "IntoStar") return Family::IntoStar;
  if (s == "Kn") return Family::Kn;
  if (s == "KnComplement") return Family::KnComplement;
  return std::nullopt;
}

inline Graph make_family(Family family, std::size_t n) {
  if (n < 1) throw Error("family size must be at least 1");
  auto name = [](const char* stem, std::size_t i) { return stem + std::to_string(i); };
  std::vector<std::string> vs;
  std::vector<EdgeDecl> es;
  switch (family) {
    case Family::Ln:
      vs = {"v1"};
      for (std::size_t i = 1; i <= n; ++i) es.push_back({name("l", i), "v1", "v1"});
      break;
    case Family::DisjointLoops:
      for (std::size_t i = 1; i <= n; ++i) vs.push_back(name("v", i));
      for (std::size_t i = 1; i <= n; ++i) es.push_back({name("l", i), name("v", i), name("v", i)});
      break;
    case Family::C2:
      vs = {"v1", "v2"};
      es = {{"e12", "v1", "v2"}, {"e21", "v2", "v1"}};
      break;
    case Family::P2:
      vs = {"v1", "v2", "v3"};
      es = {{"e12", "v1", "v2"}, {"e23", "v2", "v3"}};
      break;
    case Family::Son:
      vs.push_back("v");
      for (std::size_t i = 1; i <= n; ++i) vs.push_back(name("v", i));
      for (std::size_t i = 1; i <= n; ++i) es.push_back({name("e", i), "v", name("v", i)});
      break;
    case Family::IntoStar:
      for (std::size_t i = 1; i <= n; ++i) vs.push_back(name("w", i));
      vs.push_back("v");
      for (std::size_t i = 1; i <= n; ++i) es.push_back({name("e", i), name("w", i), "v"});
      break;
    case Family::Kn:
      for (std::size_t i = 1; i <= n; ++i) vs.push_back(name("v", i));
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          if (i == j) continue;
          es.push_back({"e" + std::to_string(i) + "_" + std::to_string(j), name("v", i), name("v", j)});
        }
      }
      break;
    case Family::KnComplement:
      for (std::size_t i = 1; i <= n; ++i) vs.push_back(name("v", i));
      break;
  }
  return Graph(std::move(vs), std::move(es));
}

} // namespace gcs

#endif // GCS_GRAPH_HPP
