#pragma once

#include <gmpxx.h>

#include <memory>

#include "trib/params.hpp"
#include "trib/sequence.hpp"

namespace trib {

// Basis triple (p_k, q_k, r_k): the k-th term of any orbit equals
// p_k*s1 + q_k*s2 + r_k*s3 where (s1,s2,s3) are the first three terms.
// Seeds: (p,q,r) at k = 1,2,3 are the unit triples.
struct BasisTriple {
  long k = 0;
  mpz_class p, q, r;

  mpz_class sum() const { return p + q + r; }
};

// Memoized table of basis triples for one parameter set.  Grows on demand,
// never shrinks; safe for concurrent readers while another thread grows it.
class BasisTable {
 public:
  explicit BasisTable(RecurrenceParams params);
  ~BasisTable();
  BasisTable(const BasisTable&) = delete;
  BasisTable& operator=(const BasisTable&) = delete;

  const RecurrenceParams& params() const { return params_; }

  // k >= 1; throws ResourceLimitError beyond the table capacity (~2 million).
  const BasisTriple& triple(long k) const;

 private:
  struct Impl;
  RecurrenceParams params_;
  std::unique_ptr<Impl> impl_;
};

// Process-wide shared table per params (census, frobenius and congeniality
// all reuse the same triples).
std::shared_ptr<const BasisTable> basis_table(const RecurrenceParams& params);

BasisTriple basis_triple(const RecurrenceParams& params, long k);

// The k-th term for the given seed, via the basis triple (no sequence built).
mpz_class terminus(const RecurrenceParams& params, const Seed& seed, long k);

// Smallest terminus over positive seeds = p_k + q_k + r_k (seed (1,1,1)); k >= 4.
mpz_class min_terminus(const RecurrenceParams& params, long k);

}  // namespace trib
