#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace trib {

// Coefficients of the cubic recurrence x_n = a*x_{n-1} + b*x_{n-2} + c*x_{n-3}.
// Requires a, b >= 0, c >= 1 and a+b+c >= 2 (a+b+c = 1 would be the bare shift
// x_n = x_{n-3}, which everything downstream rightly refuses to reason about).
struct RecurrenceParams {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t c = 1;

  RecurrenceParams() = default;  // tribonacci
  RecurrenceParams(std::int64_t a_, std::int64_t b_, std::int64_t c_);

  auto operator<=>(const RecurrenceParams&) const = default;

  bool is_tribonacci() const { return a == 1 && b == 1 && c == 1; }
  std::string str() const;  // "a,b,c"
};

// Parses "a,b,c"; throws std::invalid_argument on malformed input.
RecurrenceParams parse_params(const std::string& text);

// Discriminant of x^3 - a x^2 - b x - c over the integers:
//   -18abc - 4a^3 c + a^2 b^2 + 4 b^3 - 27 c^2.
// Negative iff the cubic has exactly one real root.
mpz_class discriminant(const RecurrenceParams& params);

}  // namespace trib
