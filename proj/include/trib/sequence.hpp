#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

#include "trib/params.hpp"

namespace trib {

using Seed = std::array<mpz_class, 3>;

// A finite window of a recurrence orbit, at least three terms long.
// Indexing is 1-based throughout to match the usual formula conventions:
// term(1) is the first element and term(length()) the terminus.
class IntSequence {
 public:
  // Validates length >= 3 and the recurrence for every index >= 4.
  IntSequence(RecurrenceParams params, std::vector<mpz_class> terms);

  const RecurrenceParams& params() const { return params_; }
  long length() const { return static_cast<long>(terms_.size()); }
  const mpz_class& term(long i) const;  // 1-based, bounds-checked
  const std::vector<mpz_class>& terms() const { return terms_; }
  const mpz_class& terminus() const { return terms_.back(); }

  bool operator==(const IntSequence& other) const = default;

 private:
  RecurrenceParams params_;
  std::vector<mpz_class> terms_;
};

// The unique sequence with the given first three terms, extended to `length`.
IntSequence extend_forward(const RecurrenceParams& params, const Seed& seed, long length);

// Prepends `steps` terms before the three tail terms, solving
//   c * x_i = x_{i+3} - a*x_{i+2} - b*x_{i+1}
// at each step.  Throws DivisibilityError when c does not divide a step.
IntSequence extend_backward(const RecurrenceParams& params, const Seed& tail, long steps);

// Terms b_1..b_count of the reversed recurrence started (0, k, l):
//   c * b_{i+3} = b_i - a*b_{i+1} - b*b_{i+2}.
// Reading a forward orbit ending (..., l, k, 0) back-to-front yields exactly
// this sequence.  Throws DivisibilityError when c does not divide a step.
std::vector<mpz_class> reverse_from_zero(const RecurrenceParams& params, const mpz_class& k,
                                         const mpz_class& l, long count);

}  // namespace trib
