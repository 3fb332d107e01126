#include "trib/verify/oracles.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "trib/basis.hpp"
#include "trib/errors.hpp"

namespace trib::verify {

mpz_class sieve_frobenius(const mpz_class& p, const mpz_class& q, const mpz_class& r) {
  if (p < 1 || q < 1 || r < 1)
    throw std::invalid_argument("sieve_frobenius needs positive generators");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
  if (g != 1) throw NotCoprimeError("sieve_frobenius needs a coprime triple");
  if (p > 100000 || q > 100000 || r > 100000)
    throw ResourceLimitError("sieve_frobenius: generators beyond the sieve scale");

  const unsigned long gens[3] = {p.get_ui(), q.get_ui(), r.get_ui()};
  const unsigned long g0 = *std::min_element(gens, gens + 3);
  if (g0 == 1) return mpz_class(-1);

  unsigned long limit = 4 * *std::max_element(gens, gens + 3) + 64;
  for (;; limit *= 2) {
    if (limit > 100000000UL) throw ResourceLimitError("sieve_frobenius: sieve would not settle");
    std::vector<char> reach(limit + 1, 0);
    reach[0] = 1;
    for (unsigned long i = 1; i <= limit; ++i)
      for (unsigned long gen : gens)
        if (i >= gen && reach[i - gen]) {
          reach[i] = 1;
          break;
        }
    unsigned long last_gap = 0;
    bool any_gap = false;
    for (unsigned long i = 1; i <= limit; ++i)
      if (!reach[i]) {
        last_gap = i;
        any_gap = true;
      }
    if (!any_gap) return mpz_class(-1);  // cannot happen with g0 > 1, kept for shape
    // settled only if a full g0-long run of hits separates the gap from the top
    if (last_gap + g0 <= limit) return mpz_class(last_gap);
  }
}

CountResult double_loop_count(const RecurrenceParams& params, long k, const mpz_class& n) {
  BasisTriple t = basis_triple(params, k);
  if (t.p < 1 || t.q < 1 || t.r < 1)
    throw std::invalid_argument("double_loop_count needs a positive basis triple");
  mpz_class count = 0;
  for (mpz_class a1 = 1; a1 * t.p + t.q + t.r <= n; ++a1) {
    mpz_class head = a1 * t.p;
    for (mpz_class a2 = 1; head + a2 * t.q + t.r <= n; ++a2) {
      mpz_class rem = n - head - a2 * t.q;
      if (rem % t.r == 0) ++count;
    }
  }
  return CountResult::of(count);
}

namespace {

// Fraction-free (Bareiss) determinant of a small integer matrix.
mpz_class bareiss_det(std::array<std::array<mpz_class, 5>, 5> m) {
  mpz_class prev = 1;
  int sign = 1;
  for (int j = 0; j < 4; ++j) {
    if (m[j][j] == 0) {
      int swap = -1;
      for (int i = j + 1; i < 5; ++i)
        if (m[i][j] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(m[j], m[swap]);
      sign = -sign;
    }
    for (int i = j + 1; i < 5; ++i) {
      for (int col = j + 1; col < 5; ++col)
        m[i][col] = (m[j][j] * m[i][col] - m[i][j] * m[j][col]) / prev;
      m[i][j] = 0;
    }
    prev = m[j][j];
  }
  return sign * m[4][4];
}

}  // namespace

mpz_class resultant_discriminant(const RecurrenceParams& params) {
  const mpz_class a = params.a, b = params.b, c = params.c;
  // Sylvester matrix of P = x^3 - a x^2 - b x - c and P' = 3x^2 - 2a x - b.
  std::array<std::array<mpz_class, 5>, 5> s{};
  s[0] = {1, -a, -b, -c, 0};
  s[1] = {0, 1, -a, -b, -c};
  s[2] = {3, -2 * a, -b, 0, 0};
  s[3] = {0, 3, -2 * a, -b, 0};
  s[4] = {0, 0, 3, -2 * a, -b};
  // disc = (-1)^(3*2/2) * Res(P, P') / lc(P)
  return -bareiss_det(std::move(s));
}

}  // namespace trib::verify
