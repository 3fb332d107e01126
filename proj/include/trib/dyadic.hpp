#pragma once

#include <gmpxx.h>

#include <memory>

#include "trib/params.hpp"

namespace trib {

// Certified enclosure of the dominant real root eta1 of x^3 - a x^2 - b x - c,
// maintained as the dyadic interval [m, m+1] / 2^bits and refined by bisection
// with exact integer sign evaluations (or collapsed to a point when the root
// itself is rational, e.g. eta1 = 2 for params (1,1,2)).
//
// Requires a negative discriminant so the bracketed sign change is the unique
// real root.  All queries refine on demand and are thread-safe.
class RootEnclosure {
 public:
  explicit RootEnclosure(const RecurrenceParams& params, int bits = 128);
  ~RootEnclosure();
  RootEnclosure(const RootEnclosure&) = delete;
  RootEnclosure& operator=(const RootEnclosure&) = delete;

  const RecurrenceParams& params() const { return params_; }
  bool exact() const;        // the root is exactly lower() (== upper())
  mpq_class lower() const;   // certified eta1 >= lower()
  mpq_class upper() const;   // certified eta1 <= upper()
  double mid() const;
  double rad() const;        // outward-rounded radius around mid()

  // Exact rational bounds of eta1^e, e >= 0.
  void pow_bounds(long e, mpq_class& lo, mpq_class& hi) const;

  // Sign of x - eta1^(j/2) for rational x >= 0, certified by refining until
  // decisive.  Returns 0 only when the two sides are exactly equal (possible
  // only for rational eta1 and even j).
  int cmp_pow_half(const mpq_class& x, long j) const;

  // Certified ceil(num / eta1^(j/2)) for integer num >= 0.
  mpz_class ceil_div_pow_half(const mpz_class& num, long j) const;

  // Certified floor(eta1^(j/2) / den) for integer den >= 1.
  mpz_class floor_pow_half_div(long j, const mpz_class& den) const;

  // Outward-rounded double interval of eta1^(j/2), j >= 0.
  void pow_half_interval(long j, double& lo, double& hi) const;

 private:
  struct Impl;
  RecurrenceParams params_;
  std::unique_ptr<Impl> impl_;
};

// Process-wide shared enclosure per params.
std::shared_ptr<const RootEnclosure> root_enclosure(const RecurrenceParams& params);

}  // namespace trib
