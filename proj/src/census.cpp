#include "trib/census.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "trib/basis.hpp"
#include "trib/dyadic.hpp"
#include "trib/errors.hpp"

namespace trib {
namespace {

// ---- positive representation counts, two generators ------------------------
// Solutions of x*p + y*q = m with x, y >= 1 form an arithmetic progression in
// x with stride q/gcd; the count is closed-form once the modular inverse of
// p/gcd is known.  Invariants are hoisted so the per-m cost is a handful of
// divisions.

long long inverse_mod_ll(long long a, long long m) {  // gcd(a, m) = 1, m >= 1
  if (m == 1) return 0;
  long long r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long qd = r0 / r1;
    r0 -= qd * r1;
    std::swap(r0, r1);
    s0 -= qd * s1;
    std::swap(s0, s1);
  }
  return ((s0 % m) + m) % m;
}

struct Pair2LL {
  long long p, q, g, pp, qq, inv;
};

Pair2LL make_pair2_ll(long long p, long long q) {
  Pair2LL t;
  t.p = p;
  t.q = q;
  t.g = std::gcd(p, q);
  t.pp = p / t.g;
  t.qq = q / t.g;
  t.inv = inverse_mod_ll(t.pp % t.qq, t.qq);
  return t;
}

long long count2_ll(const Pair2LL& t, long long m) {
  if (m < t.p + t.q) return 0;
  if (m % t.g != 0) return 0;
  long long mm = m / t.g;
  long long c = (t.qq == 1)
                    ? 0
                    : static_cast<long long>((static_cast<unsigned long long>(mm % t.qq) *
                                              static_cast<unsigned long long>(t.inv)) %
                                             static_cast<unsigned long long>(t.qq));
  long long xmin = (c == 0) ? t.qq : c;
  long long xmax = (m - t.q) / t.p;
  if (xmin > xmax) return 0;
  return (xmax - xmin) / t.qq + 1;
}

struct Pair2Z {
  mpz_class p, q, g, pp, qq, inv;
  bool unit_modulus = false;
};

Pair2Z make_pair2_z(const mpz_class& p, const mpz_class& q) {
  Pair2Z t;
  t.p = p;
  t.q = q;
  mpz_gcd(t.g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  t.pp = p / t.g;
  t.qq = q / t.g;
  t.unit_modulus = (t.qq == 1);
  if (!t.unit_modulus) mpz_invert(t.inv.get_mpz_t(), t.pp.get_mpz_t(), t.qq.get_mpz_t());
  return t;
}

mpz_class count2_z(const Pair2Z& t, const mpz_class& m) {
  if (m < t.p + t.q) return 0;
  if (m % t.g != 0) return 0;
  mpz_class c = 0;
  if (!t.unit_modulus) c = (mpz_class(m / t.g) * t.inv) % t.qq;
  mpz_class xmin = (c == 0) ? t.qq : c;
  mpz_class xmax = (m - t.q) / t.p;
  if (xmin > xmax) return 0;
  return mpz_class((xmax - xmin) / t.qq + 1);
}

// ---- positive representation counts, three generators ----------------------

mpz_class count3(mpz_class g0, mpz_class g1, mpz_class g2, const mpz_class& n) {
  // loop multiples of the largest generator, closed form for the other two
  if (g0 < g1) std::swap(g0, g1);
  if (g0 < g2) std::swap(g0, g2);
  bool small = g0.fits_slong_p() && g1 < (1L << 31) && g2 < (1L << 31) && n.fits_slong_p();
  if (small) {
    long long n_ll = n.get_si(), g0_ll = g0.get_si();
    Pair2LL t = make_pair2_ll(g1.get_si(), g2.get_si());
    long long floor2 = t.p + t.q;
    unsigned long long total = 0;
    for (long long rem = n_ll - g0_ll; rem >= floor2; rem -= g0_ll) total += count2_ll(t, rem);
    return mpz_class(static_cast<unsigned long>(total));
  }
  Pair2Z t = make_pair2_z(g1, g2);
  mpz_class floor2 = g1 + g2;
  mpz_class total = 0;
  for (mpz_class rem = n - g0; rem >= floor2; rem -= g0) total += count2_z(t, rem);
  return total;
}

// ---- theorem-backed scan start ----------------------------------------------
// Largest k >= 4 with n >= floor(eta1^{3k/2}/5) + 1, i.e. 5n > eta1^{3k/2}:
// every such terminus is guaranteed reachable at length k, so max_length can
// start its upward walk there.  Thresholds are cached.

long guaranteed_start(const mpz_class& n) {
  static std::mutex mu;
  static std::vector<mpz_class> thresh;  // thresh[i] for k = i + 4
  std::lock_guard<std::mutex> lock(mu);
  auto root = root_enclosure(RecurrenceParams{});
  std::size_t i = 0;
  while (true) {
    if (i >= thresh.size()) thresh.push_back(root->floor_pow_half_div(3 * static_cast<long>(i + 4), 5) + 1);
    if (thresh[i] > n) break;
    ++i;
  }
  return i == 0 ? 4 : static_cast<long>(i) + 3;
}

}  // namespace

CountResult count_terminations(const RecurrenceParams& params, long k, const mpz_class& n) {
  if (k < 1) throw std::invalid_argument("count_terminations needs k >= 1");
  if (n <= 0) return CountResult::of(0);
  if (k == 1) return CountResult::of(1);
  if (k <= 3) return CountResult::inf();  // two free seed coordinates

  BasisTriple t = basis_triple(params, k);
  mpz_class gens[3] = {t.p, t.q, t.r};
  std::vector<mpz_class> nz;
  for (auto& g : gens)
    if (g != 0) nz.push_back(g);

  if (nz.size() == 3) return CountResult::of(count3(gens[0], gens[1], gens[2], n));

  // some generator is zero: its seed coordinate is unconstrained, so the
  // count is Infinite when the remaining generators can hit n, else 0
  bool solvable = false;
  if (nz.size() == 1) {
    solvable = (n >= nz[0] && n % nz[0] == 0);
  } else if (nz.size() == 2) {
    Pair2Z p2 = make_pair2_z(nz[0], nz[1]);
    solvable = count2_z(p2, n) > 0;
  }  // nz empty: only terminus 0 is reachable and n >= 1 here
  return solvable ? CountResult::inf() : CountResult::of(0);
}

namespace {
// Terminus of the length-k orbit seeded (x1, x2, x3), by running the
// recurrence; deliberately independent of the basis-table path.
mpz_class run_terminus(const RecurrenceParams& params, mpz_class x1, mpz_class x2, mpz_class x3,
                       long k) {
  mpz_class next;
  for (long i = 4; i <= k; ++i) {
    next = params.a * x3 + params.b * x2 + params.c * x1;
    x1 = std::move(x2);
    x2 = std::move(x3);
    x3 = std::move(next);
  }
  return x3;
}
}  // namespace

CountResult brute_force_count(const RecurrenceParams& params, long k, const mpz_class& n,
                              unsigned long long pair_cap) {
  if (k < 4) throw std::invalid_argument("brute_force_count needs k >= 4");
  if (n <= 0) return CountResult::of(0);
  // Strict coordinatewise growth of the terminus needs positive unit termini;
  // a zero one would make the seed box unbounded.
  mpz_class u = run_terminus(params, 1, 0, 0, k);
  mpz_class v = run_terminus(params, 0, 1, 0, k);
  mpz_class w = run_terminus(params, 0, 0, 1, k);
  if (u < 1 || v < 1 || w < 1)
    throw ResourceLimitError("brute_force_count: unit terminus < 1, seed box unbounded");

  mpz_class count = 0;
  unsigned long long pairs = 0;
  for (mpz_class a1 = 1; run_terminus(params, a1, 1, 1, k) <= n; ++a1) {
    for (mpz_class a2 = 1; run_terminus(params, a1, a2, 1, k) <= n; ++a2) {
      if (++pairs > pair_cap)
        throw ResourceLimitError("brute_force_count: seed box exceeds pair cap");
      // the terminus is strictly increasing in a3: binary-search the unique hit
      mpz_class lo = 1, hi = n;  // T(a1, a2, n) >= n * w >= n
      while (lo < hi) {
        mpz_class mid = (lo + hi) / 2;
        if (run_terminus(params, a1, a2, mid, k) < n)
          lo = mid + 1;
        else
          hi = mid;
      }
      if (run_terminus(params, a1, a2, lo, k) == n) ++count;
    }
  }
  return CountResult::of(count);
}

long max_length(const RecurrenceParams& params, const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("max_length needs n >= 1");
  long k = 4;
  if (params.is_tribonacci()) {
    long ks = guaranteed_start(n);
    // defensive: trust the threshold only if the count is indeed nonzero
    if (ks > 4 && count_terminations(params, ks, n).nonzero()) k = ks;
  }
  // Scan upward tracking the last nonzero count.  The support need not be
  // contiguous, so stop only once min_terminus has exceeded n three times in
  // a row: each later term is a nonnegative combination of the previous three
  // with coefficient sum >= 2, so the minimal terminus then stays above n.
  long best = 0;
  int above = 0;
  for (; above < 3; ++k) {
    if (min_terminus(params, k) > n) {
      ++above;
      continue;
    }
    above = 0;
    if (count_terminations(params, k, n).nonzero()) best = k;
  }
  return best == 0 ? 3 : best;
}

CountResult p_of_n(const RecurrenceParams& params, const mpz_class& n) {
  return count_terminations(params, max_length(params, n), n);
}

ScanReport scan_max_p(const RecurrenceParams& params, const mpz_class& n_lo, const mpz_class& n_hi,
                      int threads, const CensusSink& sink) {
  if (n_lo < 3 || n_hi < n_lo) throw std::invalid_argument("scan_max_p needs 3 <= n_lo <= n_hi");
  if (!n_lo.fits_slong_p() || !n_hi.fits_slong_p())
    throw ResourceLimitError("scan_max_p range endpoints exceed machine integers");
  long lo = n_lo.get_si(), hi = n_hi.get_si();
  long total = hi - lo + 1;
  int nw = std::max(1, threads);
  if (static_cast<long>(nw) > total) nw = static_cast<int>(total);

  struct Local {
    ScanReport rep;
    std::vector<CensusRecord> recs;
  };
  std::vector<Local> locals(static_cast<std::size_t>(nw));

  auto work = [&](int w) {
    long a = lo + total * static_cast<long>(w) / nw;
    long b = lo + total * static_cast<long>(w + 1) / nw - 1;
    Local& loc = locals[static_cast<std::size_t>(w)];
    for (long n = a; n <= b; ++n) {
      CensusRecord rec;
      rec.n = n;
      rec.t_of_n = max_length(params, rec.n);
      rec.p = count_terminations(params, rec.t_of_n, rec.n);
      ++loc.rep.records;
      if (rec.p.infinite) {
        ++loc.rep.infinite_records;
      } else {
        unsigned long long key = rec.p.value.fits_ulong_p()
                                     ? static_cast<unsigned long long>(rec.p.value.get_ui())
                                     : ~0ULL;
        ++loc.rep.histogram[key];
        if (rec.p.value > loc.rep.max_p) {
          loc.rep.max_p = rec.p.value;
          loc.rep.argmax_n = rec.n;
          loc.rep.argmax_t = rec.t_of_n;
        }
      }
      if (sink) loc.recs.push_back(std::move(rec));
    }
  };

  if (nw == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    for (int w = 0; w < nw; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  // deterministic merge in ascending-n chunk order
  ScanReport rep;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  for (auto& loc : locals) {
    rep.records += loc.rep.records;
    rep.infinite_records += loc.rep.infinite_records;
    for (const auto& [key, cnt] : loc.rep.histogram) rep.histogram[key] += cnt;
    if (loc.rep.max_p > rep.max_p) {
      rep.max_p = loc.rep.max_p;
      rep.argmax_n = loc.rep.argmax_n;
      rep.argmax_t = loc.rep.argmax_t;
    }
  }
  if (sink)
    for (const auto& loc : locals)
      for (const auto& rec : loc.recs) sink(rec);
  return rep;
}

bool count_upper_bound_check(long k, const mpz_class& n, const mpz_class& count) {
  if (k < 4 || n < 1 || count < 0)
    throw std::invalid_argument("count_upper_bound_check needs k >= 4, n >= 1, count >= 0");
  auto root = root_enclosure(RecurrenceParams{});
  mpz_class bound = root->ceil_div_pow_half(1500 * n, 3 * k);
  return count <= bound * bound;
}

}  // namespace trib
