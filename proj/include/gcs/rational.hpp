#ifndef GCS_RATIONAL_HPP
#define GCS_RATIONAL_HPP

#include <string>

#include <gmpxx.h>

#include "gcs/errors.hpp"

namespace gcs {

/// Exact rational coefficient type. All arithmetic in the library is exact;
/// there are no tolerances anywhere.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw ParseError("not a rational literal: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) {
  return q.get_str();
}

} // namespace gcs

#endif // GCS_RATIONAL_HPP
