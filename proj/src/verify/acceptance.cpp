#include "trib/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "trib/basis.hpp"
#include "trib/census.hpp"
#include "trib/congeniality.hpp"
#include "trib/dyadic.hpp"
#include "trib/errors.hpp"
#include "trib/frobenius.hpp"
#include "trib/sequence.hpp"
#include "trib/spectral.hpp"
#include "trib/tables.hpp"
#include "trib/verify/oracles.hpp"

namespace trib::verify {
namespace {

struct Ctx {
  bool have_scan = false;
  mpz_class scan_max;  // reused by the noncongenial control comparison
};

using Outcome = std::pair<bool, std::string>;

// 1. Every row of both reference tables reproduces within 5e-4.
Outcome check_tables(Ctx&) {
  SpectralData spec = cubic_roots(RecurrenceParams());
  double worst = 0;
  for (int table : {1, 2}) {
    int rows = (table == 1) ? 11 : 9;
    for (int row = 1; row <= rows; ++row)
      worst = std::max(worst, verify_table_row(spec, table, row).worst_diff);
  }
  std::ostringstream os;
  os << "20 rows within 5e-4, worst column diff " << worst;
  return {true, os.str()};
}

// 2. The spectral constants land on their reference values.
Outcome check_spectral_constants(Ctx&) {
  SpectralData s = cubic_roots(RecurrenceParams());
  // digit-string containment: every point of the enclosure starts 1.8392867552
  bool digits = s.eta1.lo() >= 1.8392867552 && s.eta1.hi() <= 1.8392867553;
  bool ok = digits && s.delta.within(2.176, 5e-4) &&
            s.psi1.re.within(0.02267, 5e-4) && s.psi1.im.within(-0.217, 5e-4) &&
            s.zeta1.re.within(0.1908, 5e-4) && s.zeta1.im.within(-0.0187, 5e-4);
  std::ostringstream os;
  os << "eta1 " << s.eta1.mid << " delta " << s.delta.mid << " psi1 " << s.psi1.re.mid << ","
     << s.psi1.im.mid << " zeta1 " << s.zeta1.re.mid << "," << s.zeta1.im.mid;
  return {ok, os.str()};
}

// 3. Closed-form counting equals independent seed enumeration cell by cell.
Outcome check_count_oracle(Ctx&) {
  RecurrenceParams trib;
  unsigned long cells = 0;
  for (long k = 4; k <= 12; ++k)
    for (mpz_class n = 3; n <= 200; ++n) {
      CountResult fast = count_terminations(trib, k, n);
      CountResult slow = brute_force_count(trib, k, n);
      if (!(fast == slow)) {
        std::ostringstream os;
        os << "mismatch at k=" << k << " n=" << n << ": " << fast.value << " vs " << slow.value;
        return {false, os.str()};
      }
      ++cells;
    }
  std::ostringstream os;
  os << cells << " cells agree (4<=k<=12, 3<=n<=200)";
  return {true, os.str()};
}

// 4. Exact per-length thresholds stay certified below 0.2*eta1^(3k/2);
//    the k=7 threshold is exactly 26 and matches the naive sieve.
Outcome check_threshold_growth(Ctx&) {
  std::ostringstream os;
  os << "thresholds";
  for (long k = 4; k <= 14; ++k) {
    ThresholdReport rep = threshold_growth_check(k);
    if (!rep.certified_below) {
      std::ostringstream bad;
      bad << "k=" << k << " threshold " << rep.exact_threshold
          << " not certified below 0.2*eta1^(3k/2)";
      return {false, bad.str()};
    }
    os << ' ' << rep.exact_threshold;
    if (k == 7) {
      mpz_class sieved = sieve_frobenius(rep.p, rep.q, rep.r) + rep.p + rep.q + rep.r;
      if (rep.exact_threshold != 26 || sieved != 26) {
        std::ostringstream bad;
        bad << "k=7 threshold " << rep.exact_threshold << " sieve " << sieved << " (want 26)";
        return {false, bad.str()};
      }
    }
  }
  os << ", all certified < 0.2*eta1^(3k/2); k=7 equals 26 and matches the sieve";
  return {true, os.str()};
}

// 5. The ceil(1500*n/eta1^(3k/2))^2 count bound holds on the sweep.
Outcome check_count_upper_bound(Ctx&) {
  RecurrenceParams trib;
  unsigned long cells = 0;
  for (long k = 4; k <= 12; ++k)
    for (mpz_class n = 3; n <= 10000; ++n) {
      CountResult c = count_terminations(trib, k, n);
      if (c.infinite || !count_upper_bound_check(k, n, c.value)) {
        std::ostringstream os;
        os << "bound violated at k=" << k << " n=" << n << " count=" << c.value;
        return {false, os.str()};
      }
      ++cells;
    }
  std::ostringstream os;
  os << cells << " cells within the squared ceiling bound";
  return {true, os.str()};
}

// 6. Full scan of maximal-length counts: everything below 561001.
Outcome check_scan(Ctx& ctx) {
  RecurrenceParams trib;
  ScanReport rep = scan_max_p(trib, 3, 100000, 1);
  ctx.have_scan = true;
  ctx.scan_max = rep.max_p;
  bool ok = rep.infinite_records == 0 && rep.max_p <= 561001;
  std::ostringstream os;
  os << "observed max count " << rep.max_p << " at n=" << rep.argmax_n << " (t=" << rep.argmax_t
     << "), bound 561001";
  return {ok, os.str()};
}

// 7. Patterned null sequences for every length, verified in exact arithmetic.
Outcome check_null_vectors(Ctx&) {
  RecurrenceParams trib;
  auto root = root_enclosure(trib);
  auto head_ok = [&](const mpz_class& head, long num_pct, long n) {
    mpq_class x(mpz_class(head * 100), mpz_class(num_pct));
    x.canonicalize();
    return root->cmp_pow_half(x, n) < 0;
  };
  for (long n = 4; n <= 200; ++n) {
    NullSequence a = patterned_null_vector(n, NullVariant::A);
    const mpz_class &a1 = a.seq.term(1), &a2 = a.seq.term(2), &a3 = a.seq.term(3);
    if (a.seq.length() != n || a.seq.terminus() != 0 || a1 <= 0 || a2 > 0 || a3 >= 0 ||
        !head_ok(a1, 81, n)) {
      std::ostringstream os;
      os << "variant A fails at n=" << n << " (" << a1 << "," << a2 << "," << a3 << ")";
      return {false, os.str()};
    }
    NullSequence b = patterned_null_vector(n, NullVariant::B);
    const mpz_class &b1 = b.seq.term(1), &b2 = b.seq.term(2), &b3 = b.seq.term(3);
    if (b.seq.length() != n || b.seq.terminus() != 0 || b1 > 0 || b2 <= 0 || b3 >= 0 ||
        !head_ok(b2, 64, n)) {
      std::ostringstream os;
      os << "variant B fails at n=" << n << " (" << b1 << "," << b2 << "," << b3 << ")";
      return {false, os.str()};
    }
  }
  return {true, "lengths 4..200: A heads < 0.81*eta1^(n/2), B heads < 0.64*eta1^(n/2), exact"};
}

// 8. The 0.01*eta1^(n/2) consecutive-pair lower bound over the full grid.
Outcome check_pair_bound(Ctx&) {
  PairBoundReport rep = pair_bound_grid_check(100, 40);
  std::ostringstream os;
  os << rep.checked << " seed pairs, 2<=n<=40, violations " << rep.violations;
  return {rep.violations == 0 && rep.checked > 0, os.str()};
}

// 9. Shortest-path Frobenius equals the sieve everywhere small; the
//    representability bound clears the exact threshold on random triples.
Outcome check_frobenius_machinery(Ctx&) {
  unsigned long triples = 0;
  for (long p = 1; p <= 60; ++p)
    for (long q = p; q <= 60; ++q)
      for (long r = q; r <= 60; ++r) {
        if (std::gcd(std::gcd(p, q), r) != 1) continue;
        mpz_class fast = apery_frobenius(p, q, r);
        mpz_class slow = sieve_frobenius(p, q, r);
        if (fast != slow) {
          std::ostringstream os;
          os << "apery mismatch at (" << p << "," << q << "," << r << "): " << fast << " vs "
             << slow;
          return {false, os.str()};
        }
        ++triples;
      }
  std::mt19937_64 rng(0x7261646d6f6e64ULL);
  std::uniform_int_distribution<long> dist(1, 60);
  int done = 0;
  while (done < 200) {
    long p = dist(rng), q = dist(rng), r = dist(rng);
    if (std::gcd(std::gcd(p, q), r) != 1) continue;
    Relation rel_p = find_relation(p, q, r, Isolated::P);
    Relation rel_q = find_relation(p, q, r, Isolated::Q);
    mpz_class bound = killingbergtro_bound(p, q, r, rel_p, rel_q);
    if (bound < positive_frobenius(p, q, r) + 1) {
      std::ostringstream os;
      os << "bound " << bound << " below threshold+1 at (" << p << "," << q << "," << r << ")";
      return {false, os.str()};
    }
    ++done;
  }
  std::ostringstream os;
  os << triples << " sieve-checked triples; 200 random relation bounds clear threshold+1";
  return {true, os.str()};
}

// 10. The (1,1,2) gap statistic strictly grows; the tribonacci control
//     stays within the scan's observed maximum.
Outcome check_noncongenial(Ctx& ctx) {
  GapStatistic g[3];
  for (long t = 1; t <= 3; ++t) g[t - 1] = noncongenial_family(t);
  bool grow = g[0].best_count >= 2 && g[0].best_count < g[1].best_count &&
              g[1].best_count < g[2].best_count;
  mpz_class scan_bound = ctx.have_scan ? ctx.scan_max : scan_max_p(RecurrenceParams(), 3, 100000, 1).max_p;
  mpz_class control_max = 0;
  for (long t = 1; t <= 3; ++t) {
    GapStatistic c = length_gap_statistic(RecurrenceParams(), 3 * t + 3);
    if (c.best_count > control_max) control_max = c.best_count;
  }
  std::ostringstream os;
  os << "(1,1,2) counts " << g[0].best_count << " < " << g[1].best_count << " < "
     << g[2].best_count << " at m=" << g[0].best_m << "," << g[1].best_m << "," << g[2].best_m
     << "; control max " << control_max << " <= scan max " << scan_bound;
  return {grow && control_max <= scan_bound, os.str()};
}

// 11. Property sweeps: the paired-cosine inequality, closed-form containment,
//     backward/forward round-trips, and basis-triple coprimality.
Outcome check_property_suites(Ctx&) {
  const double pi = 3.14159265358979323846;
  std::mt19937_64 rng(0x70726f70657274ULL);
  std::uniform_real_distribution<double> qd(pi / 2 + 1e-9, pi - 1e-9);
  std::uniform_real_distribution<double> pd(-pi, pi);
  for (int i = 0; i < 100000; ++i) {
    double q = qd(rng), p = pd(rng);
    if (std::max(std::fabs(std::cos(p)), std::fabs(std::cos(p + q))) < std::cos(q / 2) - 1e-12) {
      std::ostringstream os;
      os << "cosine pair inequality fails at p=" << p << " q=" << q;
      return {false, os.str()};
    }
  }

  RecurrenceParams trib;
  SpectralData spec = cubic_roots(trib);
  const long n = 41;  // n - i covers 0..40
  for (long k = -20; k <= 20; ++k)
    for (long l = -20; l <= 20; ++l) {
      std::vector<mpz_class> rev = reverse_from_zero(trib, k, l, n);
      for (long i = 1; i <= n; ++i) {
        Ball v = closed_form_eval(spec, k, l, i, n);
        if (!v.contains(rev[static_cast<std::size_t>(n - i)].get_d())) {
          std::ostringstream os;
          os << "closed form misses exact term at k=" << k << " l=" << l << " i=" << i;
          return {false, os.str()};
        }
      }
    }

  std::uniform_int_distribution<long> seed_dist(1, 50), len_dist(4, 30);
  for (int trial = 0; trial < 100; ++trial) {
    Seed seed{seed_dist(rng), seed_dist(rng), seed_dist(rng)};
    long len = len_dist(rng);
    IntSequence fwd = extend_forward(trib, seed, len);
    Seed tail{fwd.term(len - 2), fwd.term(len - 1), fwd.term(len)};
    IntSequence back = extend_backward(trib, tail, len - 3);
    if (!(back == fwd)) {
      std::ostringstream os;
      os << "round trip differs for seed (" << seed[0] << "," << seed[1] << "," << seed[2]
         << ") length " << len;
      return {false, os.str()};
    }
  }

  for (long k = 4; k <= 60; ++k) {
    BasisTriple t = basis_triple(trib, k);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), t.p.get_mpz_t(), t.q.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.r.get_mpz_t());
    if (g != 1) {
      std::ostringstream os;
      os << "basis triple at k=" << k << " has common divisor " << g;
      return {false, os.str()};
    }
  }
  return {true,
          "10^5 cosine samples; closed-form containment |k|,|l|<=20, n-i<=40; "
          "100 round trips; basis gcds 1 for k<=60"};
}

struct Item {
  int index;
  const char* label;
  Outcome (*fn)(Ctx&);
};

constexpr Item kItems[] = {
    {1, "table-row-reproduction", check_tables},
    {2, "spectral-constants", check_spectral_constants},
    {3, "count-oracle-equivalence", check_count_oracle},
    {4, "frobenius-threshold-growth", check_threshold_growth},
    {5, "count-upper-bound", check_count_upper_bound},
    {6, "max-count-scan", check_scan},
    {7, "patterned-null-vectors", check_null_vectors},
    {8, "pair-lower-bound-grid", check_pair_bound},
    {9, "frobenius-machinery", check_frobenius_machinery},
    {10, "noncongenial-growth", check_noncongenial},
    {11, "property-suites", check_property_suites},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out) {
  Ctx ctx;
  std::vector<CriterionResult> results;
  for (const Item& item : kItems) {
    CriterionResult res;
    res.index = item.index;
    res.label = item.label;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [pass, detail] = item.fn(ctx);
      res.pass = pass;
      res.detail = std::move(detail);
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f", res.seconds);
    out << (res.pass ? "PASS" : "FAIL") << " criterion " << res.index << "/11 " << res.label
        << " (" << timing << " s): " << res.detail << std::endl;
    results.push_back(std::move(res));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return results.size() == std::size(kItems) &&
         std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

}  // namespace trib::verify
