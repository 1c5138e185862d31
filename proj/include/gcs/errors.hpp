#ifndef GCS_ERRORS_HPP
#define GCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gcs {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed graph text/JSON, bad expression syntax, bad permutation string.
struct ParseError : Error {
  using Error::Error;
};

/// An identifier that does not name a vertex/edge of the graph in question,
/// or a duplicate declaration.
struct UnknownIdError : Error {
  using Error::Error;
};

/// Binary algebra operation on elements over distinct graphs.
struct GraphMismatchError : Error {
  using Error::Error;
};

/// A precondition "no isolated vertices" was violated.
struct IsolatedVertexError : Error {
  using Error::Error;
};

/// Finite-dimensional representation requested for a graph with a cycle.
struct CyclicGraphError : Error {
  using Error::Error;
};

/// tau applied to an element whose normal form leaves the span of
/// {p_u : u sink} and {S_e S_f* : r(e)=r(f)}.
struct NotInV2PlusError : Error {
  using Error::Error;
};

/// An enumeration or brute-force request above the configured budget.
struct BudgetError : Error {
  using Error::Error;
};

} // namespace gcs

#endif // GCS_ERRORS_HPP
