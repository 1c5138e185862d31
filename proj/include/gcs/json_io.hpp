#ifndef GCS_JSON_IO_HPP
#define GCS_JSON_IO_HPP

// Stable JSON shapes for verdicts, certificates and verification reports.

#include <json.hpp>

#include "gcs/classify.hpp"
#include "gcs/expression.hpp"
#include "gcs/graph.hpp"
#include "gcs/simple_digraph.hpp"

namespace gcs {

inline nlohmann::json fmatrix_to_json(const FMatrix& f) {
  return {{"f_diag", f.diag}, {"f_scalar", f.scalar}};
}

inline nlohmann::json obstruction_to_json(const Graph& g, const Obstruction& ob) {
  nlohmann::json vs = nlohmann::json::array();
  for (std::size_t v : ob.vertices) vs.push_back(g.vertex_id(v));
  nlohmann::json es = nlohmann::json::array();
  for (std::size_t e : ob.edges) es.push_back(g.edge_id(e));
  return {{"kind", ob.kind}, {"vertices", vs}, {"edges", es}, {"detail", ob.detail}};
}

inline nlohmann::json verdict_to_json(const Graph& g, const ClassificationVerdict& v) {
  nlohmann::json j;
  j["family"] = family_label(v.family);
  j["group"] = group_label(v.group, v.n);
  j["n"] = v.n;
  j["connected"] = v.connected;
  j["f_diag"] = v.f.diag;
  j["f_scalar"] = v.f.scalar;
  j["obstruction"] = v.obstruction ? obstruction_to_json(g, *v.obstruction) : nlohmann::json();
  j["autf_possible"] = v.aut_f_feasible;
  j["witnesses"] = nlohmann::json();
  j["n1_coincidence"] = v.n1_coincidence;
  return j;
}

inline nlohmann::json autf_witness_to_json(const Graph& g, const AutFWitness& w) {
  nlohmann::json j;
  j["e"] = g.edge_id(w.e);
  j["g"] = g.edge_id(w.g);
  if (w.kind == AutFWitness::Kind::Square) {
    j["kind"] = "square";
    j["square_of"] = g.edge_id(w.square_of);
    j["identities"] = {"S(" + g.edge_id(w.square_of) + ")S(" + g.edge_id(w.square_of) + ") = 0",
                       "S(" + g.edge_id(w.e) + ")S(" + g.edge_id(w.g) + ") != 0"};
  } else {
    j["kind"] = "product";
    j["carrier"] = {g.edge_id(w.carrier->first), g.edge_id(w.carrier->second)};
    j["identities"] = {"S(" + g.edge_id(w.e) + ")S(" + g.edge_id(w.g) + ") = 0",
                       "S(" + g.edge_id(w.carrier->first) + ")S(" + g.edge_id(w.carrier->second) +
                           ") != 0"};
  }
  return j;
}

inline nlohmann::json autf_report_to_json(const Graph& g, const AutFReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["family"] = family_label(r.family);
  j["f_diag"] = r.f.diag;
  j["f_scalar"] = r.f.scalar;
  j["autf_possible"] = r.possible;
  j["witnesses"] = r.witness ? autf_witness_to_json(g, *r.witness) : nlohmann::json();
  // The verdict is in the identical sense: it speaks about matching
  // fundamental representations entrywise, not about abstract isomorphism.
  j["sense"] = "identical";
  return j;
}

inline nlohmann::json certificate_to_json(const Graph& g, const PermutationCertificate& c) {
  nlohmann::json perm = nlohmann::json::object();
  for (std::size_t e = 0; e < c.sigma.size(); ++e) {
    perm[g.edge_id(e)] = g.edge_id(c.sigma[e]);
  }
  nlohmann::json j;
  j["permutation"] = perm;
  j["admissible"] = c.admissible;
  if (c.failure) {
    nlohmann::json vs = nlohmann::json::array();
    for (std::size_t v : c.failure->vertices) vs.push_back(g.vertex_id(v));
    nlohmann::json es = nlohmann::json::array();
    for (std::size_t e : c.failure->edges) es.push_back(g.edge_id(e));
    j["failure"] = {{"check", c.failure->check},
                    {"vertices", vs},
                    {"edges", es},
                    {"detail", c.failure->detail}};
  } else {
    j["failure"] = nlohmann::json();
  }
  return j;
}

inline nlohmann::json theorem_report_to_json(const TheoremReport& r) {
  nlohmann::json families = nlohmann::json::object();
  for (const auto& [family, count] : r.family_counts) families[family] = count;
  nlohmann::json discrepancies = nlohmann::json::array();
  for (const auto& d : r.discrepancies) {
    discrepancies.push_back({{"graph", d.graph_text},
                             {"bruteforce_maximal", d.bruteforce_maximal},
                             {"family", family_label(d.family)},
                             {"group", group_label(d.group, d.n)},
                             {"note", d.note}});
  }
  return {{"theorem", "et1"},
          {"vmax", r.v_max},
          {"emax", r.e_max},
          {"graphs", r.graphs},
          {"positives", r.positives},
          {"families", families},
          {"discrepancies", discrepancies},
          {"ok", r.ok()}};
}

inline nlohmann::json prop31_report_to_json(const Prop31Report& r) {
  return {{"theorem", "prop31"},
          {"n", r.n},
          {"digraphs", r.digraphs},
          {"full_symmetry", r.full_symmetry},
          {"discrepancies", r.discrepancies},
          {"ok", r.ok()}};
}

} // namespace gcs

#endif // GCS_JSON_IO_HPP
