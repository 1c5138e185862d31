#ifndef GCS_ENUMERATE_HPP
#define GCS_ENUMERATE_HPP

// Exhaustive enumeration of labeled directed multigraphs. Every graph with
// |V| in [1, v_max] and |E| in [1, e_max] is produced exactly once, each edge
// assigned an arbitrary (source, range) pair, in a fixed deterministic order:
// vertex count ascending, then edge count ascending, then endpoint
// assignments lexicographically.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gcs/errors.hpp"
#include "gcs/graph.hpp"

namespace gcs {

inline constexpr std::size_t kDefaultEnumerationGuard = 5;

class GraphEnumerator {
public:
  GraphEnumerator(std::size_t v_max, std::size_t e_max, bool no_isolated,
                  std::size_t guard = kDefaultEnumerationGuard)
      : v_max_(v_max), e_max_(e_max), no_isolated_(no_isolated) {
    if (v_max < 1 || e_max < 1) throw Error("enumeration bounds must be at least 1");
    if (v_max > guard || e_max > guard) {
      throw BudgetError("enumeration budget exceeded: v_max=" + std::to_string(v_max) +
                        ", e_max=" + std::to_string(e_max) + " with guard " + std::to_string(guard));
    }
  }

  /// The next graph in order, or nullopt when exhausted. Single consumer.
  std::optional<Graph> next() {
    while (advance()) {
      Graph g = build();
      if (no_isolated_ && g.has_isolated_vertex()) continue;
      return g;
    }
    return std::nullopt;
  }

private:
  // Moves to the next (nv, ne, assignment) state; returns false when done.
  bool advance() {
    if (!started_) {
      started_ = true;
      nv_ = 1;
      ne_ = 1;
      assignment_.assign(ne_, 0);
      return true;
    }
    // Increment the assignment vector in base nv_^2.
    const std::size_t base = nv_ * nv_;
    for (std::size_t i = assignment_.size(); i-- > 0;) {
      if (++assignment_[i] < base) return true;
      assignment_[i] = 0;
    }
    if (++ne_ <= e_max_) {
      assignment_.assign(ne_, 0);
      return true;
    }
    if (++nv_ <= v_max_) {
      ne_ = 1;
      assignment_.assign(ne_, 0);
      return true;
    }
    return false;
  }

  Graph build() const {
    std::vector<std::string> vs;
    vs.reserve(nv_);
    for (std::size_t i = 1; i <= nv_; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<EdgeDecl> es;
    es.reserve(ne_);
    for (std::size_t i = 0; i < ne_; ++i) {
      std::size_t s = assignment_[i] / nv_;
      std::size_t r = assignment_[i] % nv_;
      es.push_back({"e" + std::to_string(i + 1), vs[s], vs[r]});
    }
    return Graph(std::move(vs), std::move(es));
  }

  std::size_t v_max_;
  std::size_t e_max_;
  bool no_isolated_;
  bool started_ = false;
  std::size_t nv_ = 0;
  std::size_t ne_ = 0;
  std::vector<std::size_t> assignment_;
};

} // namespace gcs

#endif // GCS_ENUMERATE_HPP
