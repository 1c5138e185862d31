#ifndef GCS_SIMPLE_DIGRAPH_HPP
#define GCS_SIMPLE_DIGRAPH_HPP

// Loop-free, multiplicity-free digraphs on labeled vertices and the
// brute-force verification that the complete and the empty digraph are the
// only ones whose automorphism group is the full symmetric group.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gcs/errors.hpp"
#include "gcs/graph.hpp"

namespace gcs {

inline constexpr std::size_t kAutomorphismGuard = 8;
inline constexpr std::size_t kProp31Guard = 5;

class SimpleDigraph {
public:
  explicit SimpleDigraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  static SimpleDigraph complete(std::size_t n) {
    SimpleDigraph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) g.set(i, j, true);
    return g;
  }

  static SimpleDigraph empty_graph(std::size_t n) { return SimpleDigraph(n); }

  static SimpleDigraph from_adjacency(const std::vector<std::vector<std::int64_t>>& a) {
    SimpleDigraph g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].size() != a.size()) throw Error("adjacency matrix must be square");
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[i][j] != 0 && a[i][j] != 1) throw Error("multiple edges are not allowed");
        if (i == j && a[i][j] != 0) throw Error("loops are not allowed");
        g.set(i, j, a[i][j] == 1);
      }
    }
    return g;
  }

  /// Decodes one off-diagonal cell per bit, row-major.
  static SimpleDigraph from_mask(std::size_t n, std::uint64_t mask) {
    SimpleDigraph g(n);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        g.set(i, j, (mask >> bit) & 1u);
        ++bit;
      }
    }
    return g;
  }

  std::size_t size() const { return n_; }
  bool at(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value) {
    if (i == j && value) throw Error("loops are not allowed");
    adj_[i * n_ + j] = value ? 1 : 0;
  }

  SimpleDigraph relabeled(const std::vector<std::size_t>& perm) const {
    SimpleDigraph g(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j) g.set(perm[i], perm[j], at(i, j));
    return g;
  }

  friend bool operator==(const SimpleDigraph& a, const SimpleDigraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

inline bool is_complete(const SimpleDigraph& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && !g.at(i, j)) return false;
  return true;
}

inline bool is_empty(const SimpleDigraph& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.at(i, j)) return false;
  return true;
}

inline bool is_automorphism(const SimpleDigraph& g, const std::vector<std::size_t>& p) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && g.at(p[i], p[j]) != g.at(i, j)) return false;
  return true;
}

inline std::uint64_t automorphism_count(const SimpleDigraph& g) {
  if (g.size() > kAutomorphismGuard) {
    throw BudgetError("automorphism counting is limited to " +
                      std::to_string(kAutomorphismGuard) + " vertices");
  }
  std::vector<std::size_t> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    if (is_automorphism(g, p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

struct Prop31Report {
  std::size_t n = 0;
  std::uint64_t digraphs = 0;
  std::uint64_t full_symmetry = 0; // complete and empty; they coincide for n = 1
  std::uint64_t discrepancies = 0; // full symmetry without being complete/empty or vice versa
  bool ok() const { return discrepancies == 0 && full_symmetry == (n == 1 ? 1 : 2); }
};

/// Enumerates all simple digraphs on n labeled vertices and checks that the
/// full automorphism group S_n occurs exactly for the complete and the empty
/// one.
inline Prop31Report verify_prop31(std::size_t n) {
  if (n < 1) throw Error("n must be at least 1");
  if (n > kProp31Guard) {
    throw BudgetError("digraph enumeration is limited to " + std::to_string(kProp31Guard) +
                      " vertices");
  }
  Prop31Report report;
  report.n = n;
  const std::size_t cells = n * (n - 1);
  const std::uint64_t total = std::uint64_t(1) << cells;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SimpleDigraph g = SimpleDigraph::from_mask(n, mask);
    const bool full = automorphism_count(g) == factorial(n);
    const bool extreme = is_complete(g) || is_empty(g);
    if (full) ++report.full_symmetry;
    if (full != extreme) ++report.discrepancies;
    ++report.digraphs;
  }
  return report;
}

} // namespace gcs

#endif // GCS_SIMPLE_DIGRAPH_HPP
