#ifndef GCS_ALGEBRA_HPP
#define GCS_ALGEBRA_HPP

// Exact arithmetic in the dense *-subalgebra of the graph C*-algebra spanned
// by the monomials S_alpha S_beta* with r(alpha) = r(beta). Elements are kept
// in a canonical normal form: no monomial has alpha and beta both nonempty
// ending in the same edge d when d is the special (least) outgoing edge of
// its source vertex. Rewriting such a monomial through the vertex relation
// p_w = sum_{s(f)=w} S_f S_f* terminates and is confluent, so normal forms
// decide equality.

#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcs/errors.hpp"
#include "gcs/graph.hpp"
#include "gcs/rational.hpp"

namespace gcs {

struct PathMonomial {
  Path alpha;
  Path beta;

  bool is_vertex_projection() const { return alpha.empty() && beta.empty(); }

  friend bool operator==(const PathMonomial& a, const PathMonomial& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
  friend std::strong_ordering operator<=>(const PathMonomial& a, const PathMonomial& b) {
    const std::size_t da = a.alpha.length() + a.beta.length();
    const std::size_t db = b.alpha.length() + b.beta.length();
    if (auto c = da <=> db; c != std::strong_ordering::equal) return c;
    if (auto c = a.alpha <=> b.alpha; c != std::strong_ordering::equal) return c;
    return a.beta <=> b.beta;
  }
};

using TermMap = std::map<PathMonomial, Rational>;

inline void add_term(TermMap& terms, const PathMonomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

inline void check_monomial(const Graph& g, const PathMonomial& m) {
  if (!is_valid_path(g, m.alpha) || !is_valid_path(g, m.beta)) {
    throw Error("monomial contains an invalid path");
  }
  if (path_range(g, m.alpha) != path_range(g, m.beta)) {
    throw Error("monomial paths have different ranges");
  }
}

// ---------------------------------------------------------------------------
// Normal form

/// True when the monomial carries a redex: both paths nonempty, equal last
/// edge d, and d is the special edge of s(d).
inline bool is_reducible(const Graph& g, const PathMonomial& m) {
  if (m.alpha.empty() || m.beta.empty()) return false;
  const std::size_t d = m.alpha.edges.back();
  if (m.beta.edges.back() != d) return false;
  return g.special_edge(g.source(d)) == d;
}

namespace detail {

inline Path drop_last(const Graph& g, const Path& p) {
  if (p.length() == 1) return empty_path(g.source(p.edges.back()));
  Path q = p;
  q.edges.pop_back();
  return q;
}

inline Path append_edge(const Graph& g, const Path& p, std::size_t e) {
  Path q = p;
  if (q.empty()) q.anchor = g.source(e);
  q.edges.push_back(e);
  return q;
}

} // namespace detail

/// Chooses the next redex among the currently reducible monomials (sorted in
/// monomial order). The default takes the first; tests inject random choices
/// to exercise confluence.
using RedexChooser = std::function<std::size_t(const std::vector<PathMonomial>&)>;

inline TermMap normal_form_terms(const Graph& g, TermMap terms,
                                 const RedexChooser& choose = {}) {
  for (auto it = terms.begin(); it != terms.end();) {
    check_monomial(g, it->first);
    it = (it->second == 0) ? terms.erase(it) : std::next(it);
  }
  while (true) {
    std::vector<PathMonomial> redexes;
    for (const auto& [mono, coeff] : terms) {
      if (is_reducible(g, mono)) redexes.push_back(mono);
    }
    if (redexes.empty()) return terms;
    const PathMonomial& m = choose ? redexes[choose(redexes)] : redexes.front();
    const Rational coeff = terms.at(m);
    terms.erase(m);
    const std::size_t d = m.alpha.edges.back();
    const std::size_t w = g.source(d);
    const Path alpha1 = detail::drop_last(g, m.alpha);
    const Path beta1 = detail::drop_last(g, m.beta);
    add_term(terms, PathMonomial{alpha1, beta1}, coeff);
    for (std::size_t f : g.out_edges(w)) {
      if (f == d) continue;
      add_term(terms,
               PathMonomial{detail::append_edge(g, alpha1, f), detail::append_edge(g, beta1, f)},
               -coeff);
    }
  }
}

// ---------------------------------------------------------------------------
// Elements

class AlgebraElement {
public:
  AlgebraElement() = default;

  static AlgebraElement zero(GraphPtr g) { return AlgebraElement(std::move(g), {}); }

  /// Normalizes the raw term map.
  static AlgebraElement from_terms(GraphPtr g, TermMap raw) {
    TermMap nf = normal_form_terms(*g, std::move(raw));
    return AlgebraElement(std::move(g), std::move(nf));
  }

  static AlgebraElement monomial(GraphPtr g, PathMonomial m, Rational coeff = 1) {
    TermMap raw;
    add_term(raw, m, coeff);
    return from_terms(std::move(g), std::move(raw));
  }

  const GraphPtr& graph() const { return graph_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement adjoint() const {
    TermMap out;
    for (const auto& [mono, coeff] : terms_) {
      out.emplace(PathMonomial{mono.beta, mono.alpha}, coeff);
    }
    // Reducibility is symmetric in the two paths, so the result is normal.
    return AlgebraElement(graph_, std::move(out));
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_graph(a, b);
    TermMap out = a.terms_;
    for (const auto& [mono, coeff] : b.terms_) add_term(out, mono, coeff);
    return AlgebraElement(a.graph_, std::move(out));
  }

  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_graph(a, b);
    TermMap out = a.terms_;
    for (const auto& [mono, coeff] : b.terms_) add_term(out, mono, -coeff);
    return AlgebraElement(a.graph_, std::move(out));
  }

  friend AlgebraElement operator-(const AlgebraElement& a) {
    TermMap out;
    for (const auto& [mono, coeff] : a.terms_) out.emplace(mono, -coeff);
    return AlgebraElement(a.graph_, std::move(out));
  }

  friend AlgebraElement operator*(const Rational& c, const AlgebraElement& a) {
    TermMap out;
    if (c != 0) {
      for (const auto& [mono, coeff] : a.terms_) out.emplace(mono, c * coeff);
    }
    return AlgebraElement(a.graph_, std::move(out));
  }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_graph(a, b);
    return from_terms(a.graph_, raw_product(*a.graph_, a.terms_, b.terms_));
  }

  /// Bilinear product of raw term maps without normalization.
  static TermMap raw_product(const Graph& g, const TermMap& x, const TermMap& y) {
    TermMap out;
    for (const auto& [mx, cx] : x) {
      for (const auto& [my, cy] : y) {
        if (auto prod = mono_product(g, mx, my)) add_term(out, *prod, cx * cy);
      }
    }
    return out;
  }

  /// Product of two monomials: (a b*)(c d*) collapses through the inner
  /// partial isometries to a single monomial or to zero.
  static std::optional<PathMonomial> mono_product(const Graph& g, const PathMonomial& x,
                                                  const PathMonomial& y) {
    if (is_prefix(g, x.beta, y.alpha)) {
      Path rest = strip_prefix(g, x.beta, y.alpha);
      return PathMonomial{concat(g, x.alpha, rest), y.beta};
    }
    if (is_prefix(g, y.alpha, x.beta)) {
      Path rest = strip_prefix(g, y.alpha, x.beta);
      return PathMonomial{x.alpha, concat(g, y.beta, rest)};
    }
    return std::nullopt;
  }

  static void require_same_graph(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.graph_ != b.graph_) {
      throw GraphMismatchError("elements live over different graphs");
    }
  }

private:
  AlgebraElement(GraphPtr g, TermMap terms) : graph_(std::move(g)), terms_(std::move(terms)) {}

  GraphPtr graph_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Generators

inline AlgebraElement gen_s(const GraphPtr& g, std::size_t e) {
  if (e >= g->edge_count()) throw UnknownIdError("edge index out of range");
  return AlgebraElement::monomial(g, {make_path(*g, {e}), empty_path(g->range(e))});
}

inline AlgebraElement gen_s_star(const GraphPtr& g, std::size_t e) {
  if (e >= g->edge_count()) throw UnknownIdError("edge index out of range");
  return AlgebraElement::monomial(g, {empty_path(g->range(e)), make_path(*g, {e})});
}

inline AlgebraElement gen_p(const GraphPtr& g, std::size_t v) {
  if (v >= g->vertex_count()) throw UnknownIdError("vertex index out of range");
  return AlgebraElement::monomial(g, {empty_path(v), empty_path(v)});
}

inline AlgebraElement gen_s(const GraphPtr& g, std::string_view id) { return gen_s(g, g->edge(id)); }
inline AlgebraElement gen_s_star(const GraphPtr& g, std::string_view id) {
  return gen_s_star(g, g->edge(id));
}
inline AlgebraElement gen_p(const GraphPtr& g, std::string_view id) { return gen_p(g, g->vertex(id)); }

inline AlgebraElement unit(const GraphPtr& g) {
  TermMap terms;
  for (std::size_t v = 0; v < g->vertex_count(); ++v) {
    add_term(terms, {empty_path(v), empty_path(v)}, 1);
  }
  return AlgebraElement::from_terms(g, std::move(terms));
}

inline AlgebraElement path_isometry(const GraphPtr& g, const Path& p) {
  return AlgebraElement::monomial(g, {p, empty_path(path_range(*g, p))});
}

// ---------------------------------------------------------------------------
// Equality

inline bool equals(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement::require_same_graph(a, b);
  return a.terms() == b.terms();
}

// ---------------------------------------------------------------------------
// Expansion oracle
//
// Expands every monomial whose common range is not a sink and whose longer
// path is shorter than L through the vertex relation, in the opposite
// direction to the normal form. Two elements agree exactly when the expansion
// of their difference at L = (longest path occurring in either) is empty;
// this checks equality without ever running the rewrite system.

inline std::size_t max_path_length(const TermMap& terms) {
  std::size_t len = 0;
  for (const auto& [mono, coeff] : terms) {
    len = std::max({len, mono.alpha.length(), mono.beta.length()});
  }
  return len;
}

inline TermMap expand_terms(const Graph& g, TermMap terms, std::size_t level) {
  for (const auto& [mono, coeff] : terms) check_monomial(g, mono);
  while (true) {
    std::optional<PathMonomial> target;
    for (const auto& [mono, coeff] : terms) {
      const std::size_t w = path_range(g, mono.alpha);
      if (g.is_sink(w)) continue;
      if (std::max(mono.alpha.length(), mono.beta.length()) >= level) continue;
      target = mono;
      break;
    }
    if (!target) return terms;
    const Rational coeff = terms.at(*target);
    terms.erase(*target);
    const std::size_t w = path_range(g, target->alpha);
    for (std::size_t f : g.out_edges(w)) {
      add_term(terms,
               PathMonomial{detail::append_edge(g, target->alpha, f),
                            detail::append_edge(g, target->beta, f)},
               coeff);
    }
  }
}

inline TermMap expand_to_level(const AlgebraElement& a, std::size_t level) {
  return expand_terms(*a.graph(), a.terms(), level);
}

/// Equality decided by the expansion oracle alone.
inline bool expansion_equal(const Graph& g, const TermMap& x, const TermMap& y) {
  TermMap diff = x;
  for (const auto& [mono, coeff] : y) add_term(diff, mono, -coeff);
  std::size_t level = std::max(max_path_length(x), max_path_length(y));
  return expand_terms(g, std::move(diff), level).empty();
}

inline bool expansion_equal(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement::require_same_graph(a, b);
  return expansion_equal(*a.graph(), a.terms(), b.terms());
}

// ---------------------------------------------------------------------------
// The functional tau

/// tau(p_u) = 1 on sinks, tau(S_e S_f*) = delta_ef, extended linearly; on a
/// non-sink vertex projection linearity forces |s^-1(v)|.
inline Rational tau(const AlgebraElement& a) {
  Rational total = 0;
  const Graph& g = *a.graph();
  for (const auto& [mono, coeff] : a.terms()) {
    if (mono.is_vertex_projection()) {
      const std::size_t v = mono.alpha.anchor;
      total += coeff * Rational(static_cast<long>(g.is_sink(v) ? 1 : g.outdegree(v)));
    } else if (mono.alpha.length() == 1 && mono.beta.length() == 1) {
      if (mono.alpha.edges[0] == mono.beta.edges[0]) total += coeff;
    } else {
      throw NotInV2PlusError("normal form contains a monomial outside span{p_u, S_e S_f*}");
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// The matrix F

struct FMatrix {
  std::vector<std::int64_t> diag; // indexed by edges
  bool scalar = true;
};

inline FMatrix f_matrix(const Graph& g) {
  require_no_isolated(g, "f_matrix");
  FMatrix f;
  f.diag.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::size_t w = g.range(e);
    f.diag.push_back(g.is_sink(w) ? 1 : static_cast<std::int64_t>(g.outdegree(w)));
  }
  for (std::int64_t d : f.diag) {
    if (d != f.diag.front()) {
      f.scalar = false;
      break;
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Linear independence over the rationals

inline bool independence_check(const std::vector<AlgebraElement>& elems) {
  if (elems.empty()) throw Error("independence_check requires a nonempty list");
  for (const auto& e : elems) AlgebraElement::require_same_graph(elems.front(), e);
  std::map<PathMonomial, std::size_t> columns;
  for (const auto& e : elems) {
    for (const auto& [mono, coeff] : e.terms()) {
      columns.emplace(mono, columns.size());
    }
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : elems) {
    std::vector<Rational> row(columns.size(), Rational(0));
    for (const auto& [mono, coeff] : e.terms()) row[columns.at(mono)] = coeff;
    rows.push_back(std::move(row));
  }
  // Exact Gaussian elimination; full row rank means independent.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < columns.size(); ++c) {
        rows[r][c] -= factor * rows[rank][c];
      }
    }
    ++rank;
  }
  return rank == rows.size();
}

} // namespace gcs

#endif // GCS_ALGEBRA_HPP
