#ifndef GCS_CLASSIFY_HPP
#define GCS_CLASSIFY_HPP

// Decides which graph C*-algebras carry maximal permutational symmetry (every
// edge permutation induces a tau-preserving unital *-endomorphism), names the
// quantum symmetry group of the positive cases, and independently verifies
// the classification by brute force over all edge permutations.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gcs/algebra.hpp"
#include "gcs/errors.hpp"
#include "gcs/graph.hpp"
#include "gcs/graph_io.hpp"
#include "gcs/enumerate.hpp"

namespace gcs {

inline constexpr std::size_t kDefaultFactorialBudget = 6;

// ---------------------------------------------------------------------------
// Verdicts

enum class GraphFamily { Ln, DisjointLoops, C2, ClassS, ClassI1_Son, ClassI1_Other, None };
enum class GroupName { UnPlus, HnInfPlus, SHnInfPlus, H2InfPlus, NotMaximal };

inline std::string family_label(GraphFamily f) {
  switch (f) {
    case GraphFamily::Ln: return "Ln";
    case GraphFamily::DisjointLoops: return "DisjointLoops";
    case GraphFamily::C2: return "C2";
    case GraphFamily::ClassS: return "ClassS";
    case GraphFamily::ClassI1_Son: return "ClassI1_Son";
    case GraphFamily::ClassI1_Other: return "ClassI1_Other";
    case GraphFamily::None: return "None";
  }
  return "?";
}

inline std::string group_label(GroupName g, std::size_t n) {
  switch (g) {
    case GroupName::UnPlus: return "U+(" + std::to_string(n) + ")";
    case GroupName::HnInfPlus: return "Hinf+(" + std::to_string(n) + ")";
    case GroupName::SHnInfPlus: return "SHinf+(" + std::to_string(n) + ")";
    case GroupName::H2InfPlus: return "Hinf+(2)";
    case GroupName::NotMaximal: return "NotMaximal";
  }
  return "?";
}

struct Obstruction {
  std::string kind; // "EL1" | "EL2" | "EL3" | "P2-shaped" | "EP1"
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::string detail;
};

struct ClassificationVerdict {
  std::size_t n = 0; // edge count
  GraphFamily family = GraphFamily::None;
  GroupName group = GroupName::NotMaximal;
  bool connected = false;
  FMatrix f;
  std::optional<Obstruction> obstruction;
  bool aut_f_feasible = false;
  bool n1_coincidence = false; // U_1+ = H_1^inf+ = SH_1^inf+
};

// ---------------------------------------------------------------------------
// Class membership predicates

/// No loops and a single common range vertex for all edges.
inline bool in_class_S(const Graph& g) {
  require_no_isolated(g, "in_class_S");
  if (g.edge_count() == 0 || g.has_loop()) return false;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.range(e) != g.range(0)) return false;
  }
  return true;
}

/// No loops and every edge range is a sink of indegree exactly 1.
inline bool in_class_I1(const Graph& g) {
  require_no_isolated(g, "in_class_I1");
  if (g.edge_count() == 0 || g.has_loop()) return false;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::size_t w = g.range(e);
    if (!g.is_sink(w) || g.indegree(w) != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Obstruction certificates

/// First applicable obstruction in the order EL1 > EL2 > EL3 > P2-shaped.
/// Each predicate keeps its hypotheses: EL2/EL3/P2-shaped apply to loop-free
/// graphs only.
inline std::optional<Obstruction> obstructions(const Graph& g) {
  require_no_isolated(g, "obstructions");
  const std::size_t n = g.edge_count();
  std::optional<std::size_t> loop, non_loop;
  for (std::size_t e = 0; e < n; ++e) {
    if (g.is_loop(e)) {
      if (!loop) loop = e;
    } else if (!non_loop) {
      non_loop = e;
    }
  }
  if (loop && non_loop) {
    return Obstruction{"EL1", {}, {*loop, *non_loop},
                       "loop " + g.edge_id(*loop) + " together with non-loop edge " +
                           g.edge_id(*non_loop)};
  }
  if (loop) return std::nullopt; // all edges are loops: no loop-free lemma applies
  if (n >= 3) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_sink(v) && !g.is_rigid_source(v)) {
        return Obstruction{"EL2", {v}, {},
                           "vertex " + g.vertex_id(v) + " is neither a sink nor a rigid source"};
      }
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t m = g.indegree(v);
    if (g.is_sink(v) && m >= 2 && n > m) {
      return Obstruction{"EL3", {v}, {},
                         "sink " + g.vertex_id(v) + " has indegree " + std::to_string(m) +
                             " < edge count " + std::to_string(n)};
    }
  }
  if (n == 2) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_sink(v) && !g.is_rigid_source(v)) {
        // Two edges through an intermediate vertex; the 2-cycle is the one
        // admissible shape and is not an obstruction.
        const bool is_c2 = g.vertex_count() == 2 && !g.is_loop(0) && !g.is_loop(1) &&
                           g.source(0) == g.range(1) && g.source(1) == g.range(0);
        if (!is_c2) {
          return Obstruction{"P2-shaped", {v}, {},
                             "two edges meet at intermediate vertex " + g.vertex_id(v)};
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Classification

inline ClassificationVerdict classify(const Graph& g) {
  if (g.edge_count() == 0) throw Error("classification requires at least one edge");
  require_no_isolated(g, "classify");

  ClassificationVerdict v;
  v.n = g.edge_count();
  v.connected = is_connected(g);
  v.f = f_matrix(g);

  const bool loops = g.has_loop();
  if (loops) {
    if (g.vertex_count() == 1) {
      v.family = GraphFamily::Ln;
    } else {
      bool disjoint_loops = g.vertex_count() == g.edge_count();
      for (std::size_t w = 0; w < g.vertex_count() && disjoint_loops; ++w) {
        disjoint_loops = g.outdegree(w) == 1 && g.is_loop(g.out_edges(w)[0]);
      }
      if (disjoint_loops) {
        v.family = GraphFamily::DisjointLoops;
      } else {
        v.family = GraphFamily::None;
        v.obstruction = obstructions(g);
        if (!v.obstruction) {
          // All edges are loops but some vertex carries more than one: the
          // witness is a loop pair at one vertex against an edge elsewhere.
          std::size_t multi = g.vertex_count();
          for (std::size_t w = 0; w < g.vertex_count(); ++w) {
            if (g.outdegree(w) >= 2) {
              multi = w;
              break;
            }
          }
          std::size_t other = g.vertex_count();
          for (std::size_t w = 0; w < g.vertex_count(); ++w) {
            if (w != multi && g.outdegree(w) >= 1) {
              other = w;
              break;
            }
          }
          Obstruction ob;
          ob.kind = "EP1";
          ob.vertices = {multi, other};
          ob.edges = {g.out_edges(multi)[0], g.out_edges(multi)[1], g.out_edges(other)[0]};
          ob.detail = "vertex " + g.vertex_id(multi) + " carries several loops while " +
                      g.vertex_id(other) + " also has an edge";
          v.obstruction = ob;
        }
      }
    }
  } else {
    const bool is_c2 = g.vertex_count() == 2 && g.edge_count() == 2 &&
                       g.source(0) == g.range(1) && g.source(1) == g.range(0) &&
                       g.source(0) != g.range(0);
    if (is_c2) {
      v.family = GraphFamily::C2;
    } else if (in_class_S(g)) {
      v.family = GraphFamily::ClassS;
    } else if (in_class_I1(g)) {
      v.family = v.connected ? GraphFamily::ClassI1_Son : GraphFamily::ClassI1_Other;
    } else {
      v.family = GraphFamily::None;
      v.obstruction = obstructions(g);
      if (!v.obstruction) {
        throw std::logic_error("loop-free graph escaped both the families and the obstructions");
      }
    }
  }

  switch (v.family) {
    case GraphFamily::Ln:
    case GraphFamily::ClassS:
      v.group = GroupName::UnPlus;
      break;
    case GraphFamily::DisjointLoops:
      v.group = GroupName::HnInfPlus;
      break;
    case GraphFamily::C2:
      v.group = GroupName::H2InfPlus;
      break;
    case GraphFamily::ClassI1_Son:
    case GraphFamily::ClassI1_Other:
      v.group = GroupName::SHnInfPlus;
      break;
    case GraphFamily::None:
      v.group = GroupName::NotMaximal;
      break;
  }
  v.aut_f_feasible =
      v.f.scalar && (v.family == GraphFamily::Ln || v.family == GraphFamily::ClassS);
  v.n1_coincidence = v.n == 1 && v.group != GroupName::NotMaximal;
  return v;
}

// ---------------------------------------------------------------------------
// Can the symmetry be all of A_ut(F)?

struct AutFWitness {
  enum class Kind { Square, Product };
  Kind kind = Kind::Square;
  // Square: S_square_of S_square_of = 0 while S_e S_g != 0 (square_of is e or g).
  // Product: S_e S_g = 0 while the carrier path satisfies S_k S_h != 0.
  std::size_t e = 0;
  std::size_t g = 0;
  std::size_t square_of = 0;
  std::optional<std::pair<std::size_t, std::size_t>> carrier;
};

struct AutFReport {
  std::size_t n = 0;
  FMatrix f;
  GraphFamily family = GraphFamily::None;
  bool possible = false;
  std::optional<AutFWitness> witness;
};

namespace detail {

/// A pair (e,g) with r(e)=s(g) where e or g is not a loop, i.e. a length-2
/// path whose first or second edge has a vanishing square. Preference order
/// follows the theorem: first a non-loop e with at least two edges leaving
/// r(e), then a loop e with a non-loop companion, then any qualifying pair.
inline std::optional<AutFWitness> find_square_witness(const Graph& g) {
  auto witness = [&](std::size_t e, std::size_t gg, std::size_t sq) {
    AutFWitness w;
    w.kind = AutFWitness::Kind::Square;
    w.e = e;
    w.g = gg;
    w.square_of = sq;
    return w;
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!g.is_loop(e) && g.outdegree(g.range(e)) >= 2) {
      return witness(e, g.out_edges(g.range(e)).front(), e);
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!g.is_loop(e)) continue;
    for (std::size_t f : g.out_edges(g.source(e))) {
      if (!g.is_loop(f)) return witness(e, f, f);
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (std::size_t f : g.out_edges(g.range(e))) {
      if (!g.is_loop(e)) return witness(e, f, e);
      if (!g.is_loop(f)) return witness(e, f, f);
    }
  }
  return std::nullopt;
}

/// Fallback for graphs whose every length-2 path consists of two loops (loop
/// islands next to source->sink pieces): a vanishing product of distinct
/// generators against a nonvanishing carrier path.
inline std::optional<AutFWitness> find_product_witness(const Graph& g) {
  std::optional<std::pair<std::size_t, std::size_t>> carrier;
  for (std::size_t k = 0; k < g.edge_count() && !carrier; ++k) {
    for (std::size_t h : g.out_edges(g.range(k))) {
      carrier = std::make_pair(k, h);
      break;
    }
  }
  if (!carrier) return std::nullopt;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (std::size_t f = 0; f < g.edge_count(); ++f) {
      if (g.range(e) != g.source(f)) {
        AutFWitness w;
        w.kind = AutFWitness::Kind::Product;
        w.e = e;
        w.g = f;
        w.carrier = carrier;
        return w;
      }
    }
  }
  return std::nullopt;
}

} // namespace detail

inline AutFReport aut_f_report(const GraphPtr& g) {
  require_no_isolated(*g, "aut_f_report");
  AutFReport report;
  report.n = g->edge_count();
  report.f = f_matrix(*g);
  report.family = classify(*g).family;
  if (report.f.scalar) {
    report.possible =
        report.family == GraphFamily::Ln || report.family == GraphFamily::ClassS;
    return report;
  }
  report.possible = false;
  report.witness = detail::find_square_witness(*g);
  if (!report.witness) report.witness = detail::find_product_witness(*g);
  if (report.witness) {
    // Confirm the certifying identities symbolically.
    const auto& w = *report.witness;
    const AlgebraElement zero = AlgebraElement::zero(g);
    if (w.kind == AutFWitness::Kind::Square) {
      const bool square_vanishes =
          equals(gen_s(g, w.square_of) * gen_s(g, w.square_of), zero);
      const bool path_nonzero = !equals(gen_s(g, w.e) * gen_s(g, w.g), zero);
      if (!square_vanishes || !path_nonzero) {
        throw std::logic_error("square witness failed its symbolic confirmation");
      }
    } else {
      const bool product_vanishes = equals(gen_s(g, w.e) * gen_s(g, w.g), zero);
      const bool carrier_nonzero =
          !equals(gen_s(g, w.carrier->first) * gen_s(g, w.carrier->second), zero);
      if (!product_vanishes || !carrier_nonzero) {
        throw std::logic_error("product witness failed its symbolic confirmation");
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Admissibility of a single edge permutation

struct PermutationFailure {
  std::string check; // see the check labels below
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::string detail;
};

struct PermutationCertificate {
  std::vector<std::size_t> sigma; // sigma[e] is the image of edge e
  bool admissible = false;
  std::optional<PermutationFailure> failure;
};

/// Decides whether S_e -> S_sigma(e) extends to a unital tau-preserving
/// *-endomorphism. Checks, in order: range consistency of the forced
/// projection images, the vertex-relation images, the projection system,
/// the range-relation images, and tau preservation on span{p_u, S_e S_f*}.
inline PermutationCertificate admissible_permutation(const GraphPtr& graph,
                                                     const std::vector<std::size_t>& sigma) {
  const Graph& g = *graph;
  require_no_isolated(g, "admissible_permutation");
  const std::size_t n = g.edge_count();
  if (sigma.size() != n) throw Error("permutation has wrong length");
  {
    std::vector<char> seen(n, 0);
    for (std::size_t img : sigma) {
      if (img >= n || seen[img]) throw Error("not a bijection on the edge set");
      seen[img] = 1;
    }
  }

  PermutationCertificate cert;
  cert.sigma = sigma;
  auto fail = [&](std::string check, std::vector<std::size_t> vs, std::vector<std::size_t> es,
                  std::string detail) {
    cert.admissible = false;
    cert.failure = PermutationFailure{std::move(check), std::move(vs), std::move(es),
                                      std::move(detail)};
    return cert;
  };

  std::vector<AlgebraElement> phi_p(g.vertex_count());

  // (1) The range relation forces phi(p_v) = p_{r(sigma(e))} for every
  // in-edge e of v; all in-edges must agree.
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& in = g.in_edges(v);
    if (in.empty()) continue;
    const std::size_t image = g.range(sigma[in[0]]);
    for (std::size_t e : in) {
      if (g.range(sigma[e]) != image) {
        return fail("range_consistency", {v}, {in[0], e},
                    "in-edges " + g.edge_id(in[0]) + " and " + g.edge_id(e) + " of " +
                        g.vertex_id(v) + " map to edges with different ranges");
      }
    }
    phi_p[v] = gen_p(graph, image);
  }

  // (2) Rigid sources take their projection image from the vertex relation.
  auto ck2_image = [&](std::size_t v) {
    AlgebraElement sum = AlgebraElement::zero(graph);
    for (std::size_t f : g.out_edges(v)) {
      sum = sum + gen_s(graph, sigma[f]) * gen_s_star(graph, sigma[f]);
    }
    return sum;
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.is_rigid_source(v)) phi_p[v] = ck2_image(v);
  }

  // (3) The vertex relation must be preserved at every non-sink.
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) continue;
    if (!equals(phi_p[v], ck2_image(v))) {
      return fail("ck2_image", {v}, {},
                  "phi(p_" + g.vertex_id(v) + ") does not equal the image of its vertex relation");
    }
  }

  // (4) The images must again form a complete orthogonal projection system.
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (!equals(phi_p[u].adjoint(), phi_p[u])) {
      return fail("projection_system", {u}, {}, "phi(p_" + g.vertex_id(u) + ") is not self-adjoint");
    }
    for (std::size_t v = u; v < g.vertex_count(); ++v) {
      const AlgebraElement prod = phi_p[u] * phi_p[v];
      const AlgebraElement expect = u == v ? phi_p[v] : AlgebraElement::zero(graph);
      if (!equals(prod, expect)) {
        return fail("projection_system", {u, v}, {},
                    "phi(p_" + g.vertex_id(u) + ") phi(p_" + g.vertex_id(v) +
                        ") != " + (u == v ? "itself" : "0"));
      }
    }
  }
  {
    AlgebraElement sum = AlgebraElement::zero(graph);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) sum = sum + phi_p[v];
    if (!equals(sum, unit(graph))) {
      return fail("projection_system", {}, {}, "images of the vertex projections do not sum to 1");
    }
  }

  // (5) S_sigma(e)* S_sigma(e) must be the image of p_{r(e)}.
  for (std::size_t e = 0; e < n; ++e) {
    if (!equals(gen_s_star(graph, sigma[e]) * gen_s(graph, sigma[e]), phi_p[g.range(e)])) {
      return fail("ck1_image", {g.range(e)}, {e},
                  "S*(sigma " + g.edge_id(e) + ") S(sigma " + g.edge_id(e) +
                      ") != phi(p_" + g.vertex_id(g.range(e)) + ")");
    }
  }

  // (6) tau must be preserved on the basis of its domain.
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (!g.is_sink(u)) continue;
    const Rational before = tau(gen_p(graph, u));
    const Rational after = tau(phi_p[u]);
    if (before != after) {
      return fail("tau_preservation", {u}, {},
                  "tau(phi(p_" + g.vertex_id(u) + ")) = " + to_string(after) + " != " +
                      to_string(before));
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = 0; f < n; ++f) {
      if (g.range(e) != g.range(f)) continue;
      const Rational before = e == f ? 1 : 0;
      const Rational after = tau(gen_s(graph, sigma[e]) * gen_s_star(graph, sigma[f]));
      if (before != after) {
        return fail("tau_preservation", {}, {e, f},
                    "tau(S(sigma " + g.edge_id(e) + ") S*(sigma " + g.edge_id(f) + ")) = " +
                        to_string(after) + " != " + to_string(before));
      }
    }
  }

  cert.admissible = true;
  return cert;
}

// ---------------------------------------------------------------------------
// Brute force over the full symmetric group on edges

struct BruteForceResult {
  bool maximal = false;
  std::size_t permutations_checked = 0;
  std::vector<PermutationCertificate> failures;
};

inline BruteForceResult maximal_perm_sym_bruteforce(const GraphPtr& graph,
                                                    std::size_t factorial_budget =
                                                        kDefaultFactorialBudget) {
  const Graph& g = *graph;
  require_no_isolated(g, "maximal_perm_sym_bruteforce");
  if (g.edge_count() > factorial_budget) {
    throw BudgetError("brute force over " + std::to_string(g.edge_count()) +
                      "! permutations exceeds the budget of " + std::to_string(factorial_budget) +
                      "!");
  }
  BruteForceResult result;
  std::vector<std::size_t> sigma(g.edge_count());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    PermutationCertificate cert = admissible_permutation(graph, sigma);
    ++result.permutations_checked;
    if (!cert.admissible) result.failures.push_back(std::move(cert));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  result.maximal = result.failures.empty();
  return result;
}

// ---------------------------------------------------------------------------
// Exhaustive verification of the classification

struct TheoremDiscrepancy {
  std::string graph_text;
  bool bruteforce_maximal = false;
  GraphFamily family = GraphFamily::None;
  GroupName group = GroupName::NotMaximal;
  std::size_t n = 0;
  std::string note;
};

struct TheoremReport {
  std::size_t v_max = 0;
  std::size_t e_max = 0;
  std::size_t graphs = 0;
  std::size_t positives = 0;
  std::map<std::string, std::size_t> family_counts;
  std::vector<TheoremDiscrepancy> discrepancies;
  bool ok() const { return discrepancies.empty(); }
};

/// For every labeled multigraph without isolated vertices in the bounded
/// range: brute-force admissibility of all edge permutations must coincide
/// with the classification verdict, and the connected positives must avoid
/// the disjoint-loops group.
inline TheoremReport verify_theorem(std::size_t v_max, std::size_t e_max,
                                    std::size_t factorial_budget = kDefaultFactorialBudget,
                                    std::size_t guard = kDefaultEnumerationGuard) {
  TheoremReport report;
  report.v_max = v_max;
  report.e_max = e_max;
  GraphEnumerator stream(v_max, e_max, /*no_isolated=*/true, guard);
  while (auto g = stream.next()) {
    auto graph = std::make_shared<const Graph>(std::move(*g));
    ++report.graphs;
    const ClassificationVerdict verdict = classify(*graph);
    const BruteForceResult bf = maximal_perm_sym_bruteforce(graph, factorial_budget);
    const bool classified_maximal = verdict.group != GroupName::NotMaximal;
    if (bf.maximal != classified_maximal) {
      report.discrepancies.push_back(
          {serialize_graph_text(*graph), bf.maximal, verdict.family, verdict.group, verdict.n,
           "brute force and classification disagree"});
      continue;
    }
    if (classified_maximal) {
      ++report.positives;
      ++report.family_counts[family_label(verdict.family)];
      if (verdict.connected && verdict.group == GroupName::HnInfPlus) {
        report.discrepancies.push_back(
            {serialize_graph_text(*graph), bf.maximal, verdict.family, verdict.group, verdict.n,
             "connected positive case carries the disjoint-loops group"});
      }
    }
  }
  return report;
}

} // namespace gcs

#endif // GCS_CLASSIFY_HPP
