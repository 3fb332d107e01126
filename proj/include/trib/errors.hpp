#pragma once

#include <stdexcept>

namespace trib {

// Common base so callers can catch the whole library as one family.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// extend_backward: c does not divide a backward step, no integer pre-image.
struct DivisibilityError : Error {
  using Error::Error;
};

// cubic_roots: discriminant >= 0, the one-real-root decomposition does not apply.
struct MultipleRealRootsError : Error {
  using Error::Error;
};

// Frobenius machinery requires gcd(p,q,r) = 1.
struct NotCoprimeError : Error {
  using Error::Error;
};

// A recomputed table entry disagrees with the printed value.
struct RowMismatchError : Error {
  using Error::Error;
};

// A constructed null sequence failed its declared sign pattern or magnitude bound.
struct PatternViolationError : Error {
  using Error::Error;
};

// killingbergtro_bound was handed a relation that does not hold.
struct InvalidRelationError : Error {
  using Error::Error;
};

// A computation exceeded its configured cap (seed box, generator size, ...).
struct ResourceLimitError : Error {
  using Error::Error;
};

}  // namespace trib
