#ifndef GCS_MATRIX_REP_HPP
#define GCS_MATRIX_REP_HPP

// Ground-truth equality oracle for acyclic graphs: the path-space
// representation on the basis of all paths ending at sinks. The generator
// matrices are verified against the defining relations before the
// representation is handed out.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "gcs/algebra.hpp"
#include "gcs/errors.hpp"
#include "gcs/graph.hpp"
#include "gcs/rational.hpp"

namespace gcs {

class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix transposed() const {
    QMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
  }

  bool is_zero() const {
    for (const Rational& q : data_)
      if (q != 0) return false;
    return true;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(r, k) == 0) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          out.at(r, c) += a.at(r, k) * b.at(k, c);
        }
      }
    }
    return out;
  }

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix dimension mismatch");
    QMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend QMatrix operator*(const Rational& c, const QMatrix& a) {
    QMatrix out = a;
    for (Rational& q : out.data_) q *= c;
    return out;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline bool is_acyclic(const Graph& g) {
  // Kahn's algorithm on the vertex set.
  std::vector<std::size_t> indeg(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) indeg[v] = g.indegree(v);
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t e : g.out_edges(v)) {
      if (--indeg[g.range(e)] == 0) ready.push_back(g.range(e));
    }
  }
  return removed == g.vertex_count();
}

class FiniteDimRep {
public:
  explicit FiniteDimRep(GraphPtr graph) : graph_(std::move(graph)) {
    const Graph& g = *graph_;
    require_no_isolated(g, "represent");
    if (!is_acyclic(g)) {
      throw CyclicGraphError("no faithful finite-dimensional representation: graph has a cycle");
    }
    // Acyclic paths never repeat a vertex, so |V| bounds every path length.
    for (const Path& p : enumerate_paths(g, g.vertex_count())) {
      if (g.is_sink(path_range(g, p))) {
        basis_index_.emplace(p, basis_.size());
        basis_.push_back(p);
      }
    }
    const std::size_t n = basis_.size();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      QMatrix m(n, n);
      for (std::size_t b = 0; b < n; ++b) {
        const Path& p = basis_[b];
        if (path_source(g, p) != g.range(e)) continue;
        Path q = p;
        q.anchor = g.source(e);
        q.edges.insert(q.edges.begin(), e);
        m.at(basis_index_.at(q), b) = 1;
      }
      edge_matrices_.push_back(std::move(m));
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      QMatrix m(n, n);
      for (std::size_t b = 0; b < n; ++b) {
        if (path_source(g, basis_[b]) == v) m.at(b, b) = 1;
      }
      vertex_matrices_.push_back(std::move(m));
    }
    verify_relations();
  }

  const GraphPtr& graph() const { return graph_; }
  const std::vector<Path>& basis() const { return basis_; }
  const QMatrix& edge_matrix(std::size_t e) const { return edge_matrices_[e]; }
  const QMatrix& vertex_matrix(std::size_t v) const { return vertex_matrices_[v]; }

  QMatrix matrix_of(const AlgebraElement& a) const {
    if (a.graph() != graph_) throw GraphMismatchError("element is over a different graph");
    const std::size_t n = basis_.size();
    QMatrix out(n, n);
    for (const auto& [mono, coeff] : a.terms()) {
      out = out + coeff * (path_matrix(mono.alpha) * path_matrix(mono.beta).transposed());
    }
    return out;
  }

  bool oracle_equals(const AlgebraElement& a, const AlgebraElement& b) const {
    return matrix_of(a) == matrix_of(b);
  }

private:
  QMatrix path_matrix(const Path& p) const {
    if (p.empty()) return vertex_matrices_[p.anchor];
    QMatrix m = edge_matrices_[p.edges.front()];
    for (std::size_t i = 1; i < p.edges.size(); ++i) m = m * edge_matrices_[p.edges[i]];
    return m;
  }

  // Internal bug sentinel: the construction must satisfy the defining
  // relations exactly.
  void verify_relations() const {
    const Graph& g = *graph_;
    const std::size_t n = basis_.size();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (edge_matrices_[e].transposed() * edge_matrices_[e] != vertex_matrices_[g.range(e)]) {
        throw std::logic_error("path-space representation violates S_e* S_e = p_r(e)");
      }
    }
    QMatrix sum(n, n);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      sum = sum + vertex_matrices_[v];
      if (g.is_sink(v)) continue;
      QMatrix ck2(n, n);
      for (std::size_t f : g.out_edges(v)) {
        ck2 = ck2 + edge_matrices_[f] * edge_matrices_[f].transposed();
      }
      if (ck2 != vertex_matrices_[v]) {
        throw std::logic_error("path-space representation violates the vertex relation");
      }
    }
    if (sum != QMatrix::identity(n)) {
      throw std::logic_error("vertex projections do not sum to the identity");
    }
  }

  GraphPtr graph_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> basis_index_;
  std::vector<QMatrix> edge_matrices_;
  std::vector<QMatrix> vertex_matrices_;
};

inline FiniteDimRep represent(GraphPtr g) { return FiniteDimRep(std::move(g)); }

} // namespace gcs

#endif // GCS_MATRIX_REP_HPP
