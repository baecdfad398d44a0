#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cob {

// Exact arithmetic only. Every quantity in this library is an integer or a
// rational; floating point is never used for mathematical content.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape or symmetry requirement violated (non-square, mismatched blocks, ...).
struct DimensionError : Error {
  using Error::Error;
};

/// A matrix required to be invertible over the rationals is singular.
struct SingularError : Error {
  using Error::Error;
};

/// Operation applied to a presentation that does not validate.
struct ValidationError : Error {
  using Error::Error;
};

/// Malformed input file, move log, or JSON document.
struct ParseError : Error {
  using Error::Error;
};

/// A library-internal invariant failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

inline int sign_of(const Int& v) { return v.sign(); }

inline Int abs_of(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace cob
