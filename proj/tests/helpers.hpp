#ifndef GCS_TESTS_HELPERS_HPP
#define GCS_TESTS_HELPERS_HPP

#include <map>
#include <random>
#include <vector>

#include "gcs/algebra.hpp"
#include "gcs/graph.hpp"
#include "gcs/graph_io.hpp"

namespace gcs::testing {

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

inline GraphPtr family(Family f, std::size_t n) { return share(make_family(f, n)); }

inline GraphPtr from_text(std::string_view text) { return share(parse_graph(text)); }

/// Loop e at v plus an edge g leaving v.
inline GraphPtr graph_T() { return from_text("v w ; e: v -> v ; g: v -> w"); }

/// Loop g at v plus an edge e entering v.
inline GraphPtr graph_Tprime() { return from_text("v w ; g: v -> v ; e: w -> v"); }

/// v1 -> v2 with v2 -> v3 and v2 -> v4; its F matrix is diag(2,1,1).
inline GraphPtr branching_graph() {
  return from_text("v1 v2 v3 v4 ; e1: v1 -> v2 ; e2: v2 -> v3 ; e3: v2 -> v4");
}

/// Paths of the graph grouped by range vertex, for monomial sampling.
inline std::vector<std::vector<Path>> paths_by_range(const Graph& g, std::size_t max_len) {
  std::vector<std::vector<Path>> by_range(g.vertex_count());
  for (const Path& p : enumerate_paths(g, max_len)) {
    by_range[path_range(g, p)].push_back(p);
  }
  return by_range;
}

inline TermMap random_terms(const GraphPtr& g, std::mt19937& rng, std::size_t max_terms = 4,
                            std::size_t max_len = 2) {
  static std::map<const Graph*, std::map<std::size_t, std::vector<std::vector<Path>>>> cache;
  auto& grouped = cache[g.get()];
  if (grouped.find(max_len) == grouped.end()) {
    grouped.emplace(max_len, paths_by_range(*g, max_len));
  }
  const auto& by_range = grouped.at(max_len);

  std::uniform_int_distribution<std::size_t> term_count(1, max_terms);
  std::uniform_int_distribution<int> numer(-3, 3);
  std::uniform_int_distribution<int> denom(1, 3);
  std::uniform_int_distribution<std::size_t> vert(0, g->vertex_count() - 1);

  TermMap terms;
  const std::size_t k = term_count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t v = vert(rng);
    if (by_range[v].empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, by_range[v].size() - 1);
    const Path& alpha = by_range[v][pick(rng)];
    const Path& beta = by_range[v][pick(rng)];
    int num = numer(rng);
    if (num == 0) num = 1;
    add_term(terms, PathMonomial{alpha, beta}, Rational(num, denom(rng)));
  }
  return terms;
}

inline AlgebraElement random_element(const GraphPtr& g, std::mt19937& rng,
                                     std::size_t max_terms = 4, std::size_t max_len = 2) {
  return AlgebraElement::from_terms(g, random_terms(g, rng, max_terms, max_len));
}

} // namespace gcs::testing

#endif // GCS_TESTS_HELPERS_HPP
