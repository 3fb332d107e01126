#pragma once

// Exact counting of positive orbits by terminus: f_k(n), the maximal length
// t(n), the count at maximal length p(n), range scans, and the certified
// ceil(1500n/eta1^{3k/2})^2 upper-bound check.

#include <gmpxx.h>

#include <functional>
#include <map>

#include "trib/params.hpp"

namespace trib {

struct CountResult {
  bool infinite = false;
  mpz_class value{0};

  static CountResult inf() { return {true, 0}; }
  static CountResult of(mpz_class v) { return {false, std::move(v)}; }
  bool nonzero() const { return infinite || value != 0; }
  bool operator==(const CountResult&) const = default;
};

// f_k(n): number of positive length-k orbits terminating at n.  Exact for
// every k >= 1: k=1 counts the singleton, k in {2,3} is Infinite for n >= 1,
// n <= 0 counts zero.  Cost O(n / max generator) per query for k >= 4.
CountResult count_terminations(const RecurrenceParams& params, long k, const mpz_class& n);

// Independent recount by direct seed enumeration; shares no counting code
// with count_terminations (termini are recomputed by running the recurrence).
// k >= 4.  Throws ResourceLimitError when a unit seed has nonpositive
// terminus (the seed box is then unbounded) or the box exceeds pair_cap.
CountResult brute_force_count(const RecurrenceParams& params, long k, const mpz_class& n,
                              unsigned long long pair_cap = 50'000'000ULL);

// t(n): the largest k with f_k(n) > 0; equals 3 when f_4(n) = 0 (lengths 2
// and 3 always admit infinitely many orbits).  n >= 1.
long max_length(const RecurrenceParams& params, const mpz_class& n);

// p(n) = f_{t(n)}(n); Infinite exactly when t(n) = 3.
CountResult p_of_n(const RecurrenceParams& params, const mpz_class& n);

struct CensusRecord {
  mpz_class n;
  long t_of_n = 0;
  CountResult p;
};

struct ScanReport {
  mpz_class n_lo, n_hi;
  unsigned long long records = 0;
  mpz_class max_p;     // largest finite p(n) seen (0 when none)
  mpz_class argmax_n;  // smallest n attaining max_p
  long argmax_t = 0;
  unsigned long long infinite_records = 0;
  std::map<unsigned long long, unsigned long long> histogram;  // finite p -> #n
};

using CensusSink = std::function<void(const CensusRecord&)>;

// Scans n_lo..n_hi (n_lo >= 3).  The range is split across `threads` workers;
// the merge is deterministic and the sink, when given, receives records in
// ascending n regardless of thread count.  Argmax ties break to smaller n.
ScanReport scan_max_p(const RecurrenceParams& params, const mpz_class& n_lo,
                      const mpz_class& n_hi, int threads = 1, const CensusSink& sink = nullptr);

// True iff count <= ceil(1500*n/eta1^{3k/2})^2 with the ceiling certified by
// outward rounding (tribonacci scaling; k >= 4, n >= 1, count >= 0).
bool count_upper_bound_check(long k, const mpz_class& n, const mpz_class& count);

}  // namespace trib
