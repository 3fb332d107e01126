#pragma once

// Classification and desk-scale experiments for general parameter sets:
// the affability test (c = 1, unique real root above 1), per-n maximal-length
// probes, the (1,1,2) gap statistic whose growth rules out a uniform count
// bound there, per-length threshold/count statistics for affable parameters,
// and small constructive searches behind the general null-vector machinery.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "trib/ball.hpp"
#include "trib/basis.hpp"
#include "trib/census.hpp"
#include "trib/frobenius.hpp"
#include "trib/params.hpp"
#include "trib/spectral.hpp"

namespace trib {

struct AffabilityVerdict {
  RecurrenceParams params;
  mpz_class discriminant;    // of x^3 - a x^2 - b x - c, exact
  bool affable = false;      // c == 1, discriminant < 0, eta1 > 1 (certified)
  std::optional<Ball> eta1;  // enclosure of the real root when it is unique
};

AffabilityVerdict is_affable(const RecurrenceParams& params);

// The affable members of the test grid 0 <= a, b <= 4, a + b >= 1, c = 1.
std::vector<RecurrenceParams> affable_grid();

struct ProbeRecord {
  mpz_class n;
  long max_len = 0;     // largest length with a nonzero count
  CountResult count;    // the count at that length (can be Infinite)
  bool capped = false;  // finite count exceeding the cap, flagged not trusted
};

struct CongenialityProbe {
  RecurrenceParams params;
  mpz_class n_lo, n_hi;
  std::vector<ProbeRecord> records;
  mpz_class observed_max_count;  // running max over the finite counts
  unsigned long infinite_records = 0;
  unsigned long capped_records = 0;
};

// Per-n maximal length and the count there for n in [n_lo, n_hi]; requires
// a + b >= 1 so every maximal length is finite.  Counts are exact either way;
// count_cap only controls the "capped" flag on the records.
CongenialityProbe congeniality_probe(const RecurrenceParams& params, const mpz_class& n_lo,
                                     const mpz_class& n_hi, const mpz_class& count_cap);

struct GapStatistic {
  RecurrenceParams params;
  long length = 0;       // L: counts at L among m that cannot reach length L+1
  mpz_class best_m;      // first maximizer (0 when no gap value exists)
  mpz_class best_count;  // max{f_L(m) : f_{L+1}(m) = 0}
  mpz_class gap_limit;   // every m above it terminates at length L+1
};

// Exhaustive max{f_L(m) : f_{L+1}(m) = 0}.  The search range is certified
// finite: m must be representable at L but not at L+1, so it is bounded by
// the positive Frobenius threshold of the basis triple at L+1.
GapStatistic length_gap_statistic(const RecurrenceParams& params, long length);

// The gap statistic for x_n = x_{n-1} + x_{n-2} + 2*x_{n-3} at length
// 3*t_index + 3.  Strictly increasing in t_index, which is exactly the
// desk-scale evidence that this recurrence admits no uniform count bound.
GapStatistic noncongenial_family(long t_index);

struct ThresholdKRecord {
  long k = 0;
  BasisTriple triple;
  mpz_class threshold;  // largest n with no positive length-k termination
  double u_hi = 0;      // upper bound of threshold / eta1^(3k/2), outward
  mpz_class max_count;  // max finite f_k(n) for n up to the (k+1) threshold
  mpz_class argmax_n;
  unsigned long infinite_counts = 0;
};

struct AffableThresholdReport {
  RecurrenceParams params;
  long k_lo = 0, k_hi = 0;
  std::vector<ThresholdKRecord> records;
  double max_u_hi = 0;  // sup over k of the threshold ratio
  mpz_class max_count;  // sup over k of the per-k count statistic
};

// For each k in [k_lo, k_hi]: the exact positive Frobenius threshold of the
// basis triple (zero entries reduced away), its ratio against eta1^(3k/2),
// and the maximal count at length k among n up to the (k+1) threshold.
// Boundedness of the count column across k is the desk-scale congeniality
// evidence.  Requires affable params.
AffableThresholdReport affable_threshold_check(const RecurrenceParams& params, long k_lo,
                                               long k_hi);

struct CosWindow {
  double t = 0;       // sample point inside the variant's window
  double margin = 0;  // certified: all three cosines clear zero by this much
};

// Direct grid search for the sign patterns behind the null-vector seeds:
// variant A wants cos(t) > 0 > cos(t + delta), cos(t + 2*delta) with t in
// (pi/2 - delta, 3*pi/2 - 2*delta); variant B wants cos(u + delta) > 0 >
// cos(u), cos(u + 2*delta) with u in (pi/2 - 2*delta, -pi/2).  Returns the
// best certified sample; throws PatternViolationError when no grid point
// certifies (impossible for certified delta inside (pi/2, pi)).
CosWindow cos_sign_window(const SpectralData& spec, NullVariant variant);

struct SeedDeterminant {
  Ball det;  // Re(psi2)*Im(zeta2) - Im(psi2)*Re(zeta2)
  bool certified_nonzero = false;
};

// Determinant of the 2x2 real system behind (k, l) -> k*psi2 + l*zeta2.
// Certified nonzero means only the trivial real pair lands on zero, which is
// what makes the seed-pair angles dense and the null-vector seeds available.
SeedDeterminant basis_determinant_check(const RecurrenceParams& params);

// Backward-construction analogue of the tabulated tribonacci rows for general
// c = 1 parameters: scans seed pairs |k|, |l| <= seed_bound, builds each
// length-n sequence terminating at 0 by exact backward recursion, and returns
// the pattern-conforming one minimizing max(|a1|, |a2|, |a3|).
// Patterns: variant A (+, 0-, -) on (a1, a2, a3); variant B (0-, +, -).
std::optional<NullSequence> constructed_null_vector(const RecurrenceParams& params, long n,
                                                    NullVariant variant, long seed_bound);

struct NullFitRecord {
  long n = 0;
  mpz_class max_coord;
  double ratio_hi = 0;  // outward bound of max_coord / eta1^(n/2)
};

struct NullFitReport {
  RecurrenceParams params;
  NullVariant variant = NullVariant::A;
  long n_lo = 0, n_hi = 0;
  long seed_bound = 0;
  std::vector<NullFitRecord> records;
  double fitted_c = 0;  // max ratio over the range
};

// Runs constructed_null_vector over [n_lo, n_hi] and fits the constant C in
// max coordinate <= C * eta1^(n/2).  Doubles seed_bound once before giving up
// on an n (PatternViolationError).  Requires affable params.
NullFitReport fitted_null_search(const RecurrenceParams& params, long n_lo, long n_hi,
                                 NullVariant variant, long seed_bound = 8);

}  // namespace trib
