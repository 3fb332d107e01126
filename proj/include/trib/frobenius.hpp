#pragma once

// Coin-problem machinery for basis triples: the classical (non-negative)
// Frobenius number via shortest paths on residues, the strictly-positive
// variant, minimal isolating relations, the a*p + d*q + r representability
// bound, and construction/search of sign-patterned null sequences.

#include <gmpxx.h>

#include <optional>
#include <string>

#include "trib/params.hpp"
#include "trib/sequence.hpp"

namespace trib {

// Largest integer with no representation x*p + y*q + z*r, x,y,z >= 0
// (-1 when everything is representable).  Shortest path over residues modulo
// the smallest generator; requires it <= 2^20 and all generators <= 2^40
// (ResourceLimitError beyond).  Throws NotCoprimeError when gcd != 1.
mpz_class apery_frobenius(const mpz_class& p, const mpz_class& q, const mpz_class& r);

// Largest n with no representation using x,y,z >= 1; equals
// apery_frobenius + p + q + r by the shift n -> n - (p+q+r).
mpz_class positive_frobenius(const mpz_class& p, const mpz_class& q, const mpz_class& r);

enum class Isolated { P, Q };

struct Relation {
  Isolated which = Isolated::P;
  // a * isolated = b * other1 + c * other2, with a, c >= 1 and b >= 0.
  // For which = P the others are (q, r); for which = Q they are (p, r).
  mpz_class a, b, c;
};

// Minimal isolated coefficient (then smallest b) satisfying the sign rules.
Relation find_relation(const mpz_class& p, const mpz_class& q, const mpz_class& r, Isolated which);

// a*p + d*q + r for valid relations a*p = b*q + c*r and d*q = e*p + f*r;
// every integer at or above it is positively representable.
// Throws InvalidRelationError when a relation fails its sign rules or its
// defining equation.
mpz_class killingbergtro_bound(const mpz_class& p, const mpz_class& q, const mpz_class& r,
                               const Relation& rel_p, const Relation& rel_q);

enum class SignReq { Any, Pos, Neg, NonNeg, NonPos, Zero };

struct SignPattern {
  SignReq s1 = SignReq::Any, s2 = SignReq::Any, s3 = SignReq::Any;
};

// "+,0-,-" -> (Pos, NonPos, Neg); tokens: + - 0 0+ 0- * (or "any").
SignPattern parse_sign_pattern(const std::string& text);
bool matches(SignReq req, const mpz_class& v);

struct NullSequence {
  IntSequence seq;      // terminates at 0
  SignPattern pattern;  // declared signs of the first three terms
};

// The two tabulated constructions of length-n null sequences:
//   A: a1 > 0 >= a2, 0 > a3, with a1 < 0.81 * eta1^{n/2};
//   B: b2 > 0 >= b1, 0 > b3, with b2 < 0.64 * eta1^{n/2}.
// Hardcoded for 4 <= n < 7; for n >= 7 the seed pair (k, l) comes from the
// table row containing frac(delta*n/(2*pi)) (both rows are tried when the
// certified enclosure straddles a boundary) and the sequence is built by
// exact backward recursion.  Sign pattern and magnitude bound are verified
// exactly; PatternViolationError if no candidate row passes.  Tribonacci.
enum class NullVariant { A, B };
NullSequence patterned_null_vector(long n, NullVariant variant);

// Exhaustive scan of the signed (a1, a2) box (|coordinate| <= box_bound,
// signs per pattern), solving a3 by divisibility against the basis triple at
// k = n.  Returns the nonzero pattern-satisfying null sequence minimizing
// max(|a1|,|a2|,|a3|) (first in ascending (a1, a2) order on ties), or nullopt.
std::optional<NullSequence> null_vector_search(const RecurrenceParams& params, long n,
                                               const SignPattern& pattern, long box_bound);

struct ThresholdReport {
  long k = 0;
  mpz_class p, q, r;         // basis triple at length k
  mpz_class exact_threshold;  // largest n with f_k(n) = 0
  mpz_class pipeline_bound;   // a1*p + b2*q + r from the null-vector relations
  bool certified_below = false;  // exact_threshold < 0.2 * eta1^{3k/2}, certified
};

// Exact threshold for tribonacci length k plus the constructive bound from
// the A/B null vectors; certifies the 0.2 * eta1^{3k/2} comparison.
ThresholdReport threshold_growth_check(long k);

}  // namespace trib
