#pragma once

// Independent reference implementations used only to cross-check the library:
// each one takes the dumbest correct route so it shares no algebra or code
// path with the operation it validates.

#include <gmpxx.h>

#include "trib/census.hpp"
#include "trib/params.hpp"

namespace trib::verify {

// Frobenius number by plain boolean sieve: grows the table until the run
// above the last gap is at least min-generator long (everything beyond is
// then representable) and reports that gap, -1 when there is none.
mpz_class sieve_frobenius(const mpz_class& p, const mpz_class& q, const mpz_class& r);

// f_k(n) by the direct two-coefficient loop over the basis triple, solving
// the third coefficient by divisibility; requires all three entries positive.
CountResult double_loop_count(const RecurrenceParams& params, long k, const mpz_class& n);

// Discriminant of x^3 - a x^2 - b x - c via the Sylvester resultant of the
// polynomial and its derivative (fraction-free elimination).
mpz_class resultant_discriminant(const RecurrenceParams& params);

}  // namespace trib::verify
