#include "trib/congeniality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "trib/dyadic.hpp"
#include "trib/errors.hpp"
#include "trib/sequence.hpp"

namespace trib {

AffabilityVerdict is_affable(const RecurrenceParams& params) {
  AffabilityVerdict v;
  v.params = params;
  v.discriminant = discriminant(params);
  if (v.discriminant < 0) {
    auto root = root_enclosure(params);
    v.eta1 = Ball::with_rad(root->mid(), root->rad());
    v.affable = (params.c == 1) && root->lower() > 1;
  }
  return v;
}

std::vector<RecurrenceParams> affable_grid() {
  std::vector<RecurrenceParams> grid;
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b) {
      if (a + b < 1) continue;
      RecurrenceParams p(a, b, 1);
      if (is_affable(p).affable) grid.push_back(p);
    }
  return grid;
}

CongenialityProbe congeniality_probe(const RecurrenceParams& params, const mpz_class& n_lo,
                                     const mpz_class& n_hi, const mpz_class& count_cap) {
  if (params.a + params.b < 1) throw std::invalid_argument("congeniality_probe needs a + b >= 1");
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("congeniality_probe: bad n range");
  if (count_cap < 1) throw std::invalid_argument("congeniality_probe: count_cap must be >= 1");
  CongenialityProbe probe;
  probe.params = params;
  probe.n_lo = n_lo;
  probe.n_hi = n_hi;
  probe.observed_max_count = 0;
  for (mpz_class n = n_lo; n <= n_hi; ++n) {
    ProbeRecord rec;
    rec.n = n;
    rec.max_len = max_length(params, n);
    rec.count = count_terminations(params, rec.max_len, n);
    if (rec.count.infinite) {
      ++probe.infinite_records;
    } else {
      if (rec.count.value > probe.observed_max_count) probe.observed_max_count = rec.count.value;
      if (rec.count.value > count_cap) {
        rec.capped = true;
        ++probe.capped_records;
      }
    }
    probe.records.push_back(std::move(rec));
  }
  return probe;
}

namespace {

// Positive Frobenius threshold with zero generators dropped (a zero entry
// leaves its coefficient free, so it cannot affect representability).
// Two generators: largest n not x*g1 + y*g2 with x, y >= 1 is g1*g2.
mpz_class reduced_positive_threshold(const BasisTriple& t) {
  std::vector<mpz_class> gens;
  for (const mpz_class* g : {&t.p, &t.q, &t.r})
    if (*g != 0) gens.push_back(*g);
  if (gens.size() == 3) return positive_frobenius(gens[0], gens[1], gens[2]);
  if (gens.size() == 2) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), gens[0].get_mpz_t(), gens[1].get_mpz_t());
    if (g != 1) throw NotCoprimeError("two-generator threshold needs coprime generators");
    return gens[0] * gens[1];
  }
  if (gens.size() == 1 && gens[0] == 1) return 0;
  throw Error("positive threshold unbounded for basis triple (" + t.p.get_str() + "," +
              t.q.get_str() + "," + t.r.get_str() + ")");
}

// Outward upper bound of num / eta1^(j/2) as a double (reporting only;
// certified claims go through RootEnclosure::cmp_pow_half instead).
double outward_ratio(const RootEnclosure& root, const mpz_class& num, long j) {
  double lo, hi;
  root.pow_half_interval(j, lo, hi);
  double x = num.get_d();
  x += std::fabs(x) * 3e-16 + 1e-300;
  return std::nextafter((x / lo) * (1 + 3e-16), HUGE_VAL);
}

}  // namespace

GapStatistic length_gap_statistic(const RecurrenceParams& params, long length) {
  if (length < 4) throw std::invalid_argument("length_gap_statistic needs length >= 4");
  GapStatistic stat;
  stat.params = params;
  stat.length = length;
  stat.best_m = 0;
  stat.best_count = 0;
  stat.gap_limit = reduced_positive_threshold(basis_triple(params, length + 1));
  for (mpz_class m = min_terminus(params, length); m <= stat.gap_limit; ++m) {
    CountResult here = count_terminations(params, length, m);
    if (here.infinite)
      throw Error("gap statistic undefined: infinite count at length " + std::to_string(length));
    if (here.value <= stat.best_count) continue;  // cannot improve; skip the second count
    if (count_terminations(params, length + 1, m).nonzero()) continue;
    stat.best_m = m;
    stat.best_count = here.value;
  }
  return stat;
}

GapStatistic noncongenial_family(long t_index) {
  if (t_index < 1) throw std::invalid_argument("noncongenial_family needs t_index >= 1");
  return length_gap_statistic(RecurrenceParams(1, 1, 2), 3 * t_index + 3);
}

AffableThresholdReport affable_threshold_check(const RecurrenceParams& params, long k_lo,
                                               long k_hi) {
  if (k_lo < 4 || k_hi < k_lo)
    throw std::invalid_argument("affable_threshold_check: bad k range");
  if (!is_affable(params).affable)
    throw std::invalid_argument("affable_threshold_check needs affable params");
  auto root = root_enclosure(params);
  AffableThresholdReport rep;
  rep.params = params;
  rep.k_lo = k_lo;
  rep.k_hi = k_hi;
  rep.max_count = 0;
  for (long k = k_lo; k <= k_hi; ++k) {
    ThresholdKRecord rec;
    rec.k = k;
    rec.triple = basis_triple(params, k);
    rec.threshold = reduced_positive_threshold(rec.triple);
    rec.u_hi = outward_ratio(*root, rec.threshold, 3 * k);
    rec.max_count = 0;
    rec.argmax_n = 0;
    mpz_class limit = reduced_positive_threshold(basis_triple(params, k + 1));
    for (mpz_class n = min_terminus(params, k); n <= limit; ++n) {
      CountResult c = count_terminations(params, k, n);
      if (c.infinite) {
        ++rec.infinite_counts;
        continue;
      }
      if (c.value > rec.max_count) {
        rec.max_count = c.value;
        rec.argmax_n = n;
      }
    }
    if (rec.u_hi > rep.max_u_hi) rep.max_u_hi = rec.u_hi;
    if (rec.max_count > rep.max_count) rep.max_count = rec.max_count;
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

CosWindow cos_sign_window(const SpectralData& spec, NullVariant variant) {
  Ball pi = ball_pi();
  Ball lo_b, hi_b;
  if (variant == NullVariant::A) {
    lo_b = 0.5 * pi - spec.delta;
    hi_b = 1.5 * pi - 2.0 * spec.delta;
  } else {
    lo_b = 0.5 * pi - 2.0 * spec.delta;
    hi_b = -(0.5 * pi);
  }
  double lo = lo_b.hi(), hi = hi_b.lo();  // certified interior of the window
  if (!(lo < hi))
    throw PatternViolationError("empty sign window: delta not certified inside (pi/2, pi)");
  CosWindow best;
  bool have = false;
  const int kGrid = 512;
  for (int i = 0; i < kGrid; ++i) {
    double t = lo + (hi - lo) * (i + 0.5) / kGrid;
    Ball tb = Ball::point(t);
    Ball c0 = bcos(tb);
    Ball c1 = bcos(tb + spec.delta);
    Ball c2 = bcos(tb + 2.0 * spec.delta);
    double margin = (variant == NullVariant::A) ? std::min({c0.lo(), -c1.hi(), -c2.hi()})
                                                : std::min({c1.lo(), -c0.hi(), -c2.hi()});
    if (margin > 0 && (!have || margin > best.margin)) {
      have = true;
      best.t = t;
      best.margin = margin;
    }
  }
  if (!have) throw PatternViolationError("no certified sample in the sign window");
  return best;
}

SeedDeterminant basis_determinant_check(const RecurrenceParams& params) {
  SpectralData spec = cubic_roots(params);
  CBall p2 = spec.psi2(), z2 = spec.zeta2();
  SeedDeterminant out;
  out.det = p2.re * z2.im - p2.im * z2.re;
  out.certified_nonzero = out.det.certainly_nonzero();
  return out;
}

std::optional<NullSequence> constructed_null_vector(const RecurrenceParams& params, long n,
                                                    NullVariant variant, long seed_bound) {
  if (params.c != 1) throw std::invalid_argument("constructed_null_vector needs c = 1");
  if (n < 4 || seed_bound < 1)
    throw std::invalid_argument("constructed_null_vector needs n >= 4, seed_bound >= 1");
  SignPattern pat = (variant == NullVariant::A)
                        ? SignPattern{SignReq::Pos, SignReq::NonPos, SignReq::Neg}
                        : SignPattern{SignReq::NonPos, SignReq::Pos, SignReq::Neg};
  bool have = false;
  mpz_class best_norm;
  std::vector<mpz_class> best_terms;
  for (long k = -seed_bound; k <= seed_bound; ++k) {
    for (long l = -seed_bound; l <= seed_bound; ++l) {
      if (k == 0 && l == 0) continue;
      std::vector<mpz_class> rev = reverse_from_zero(params, k, l, n);
      const mpz_class& a1 = rev[static_cast<std::size_t>(n - 1)];
      const mpz_class& a2 = rev[static_cast<std::size_t>(n - 2)];
      const mpz_class& a3 = rev[static_cast<std::size_t>(n - 3)];
      if (!matches(pat.s1, a1) || !matches(pat.s2, a2) || !matches(pat.s3, a3)) continue;
      mpz_class norm = abs(a1);
      mpz_class m2 = abs(a2);
      if (m2 > norm) norm = m2;
      mpz_class m3 = abs(a3);
      if (m3 > norm) norm = m3;
      if (have && norm >= best_norm) continue;
      have = true;
      best_norm = norm;
      best_terms.assign(rev.rbegin(), rev.rend());
    }
  }
  if (!have) return std::nullopt;
  return NullSequence{IntSequence(params, std::move(best_terms)), pat};
}

NullFitReport fitted_null_search(const RecurrenceParams& params, long n_lo, long n_hi,
                                 NullVariant variant, long seed_bound) {
  if (n_lo < 4 || n_hi < n_lo) throw std::invalid_argument("fitted_null_search: bad n range");
  if (!is_affable(params).affable)
    throw std::invalid_argument("fitted_null_search needs affable params");
  auto root = root_enclosure(params);
  NullFitReport rep;
  rep.params = params;
  rep.variant = variant;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  rep.seed_bound = seed_bound;
  for (long n = n_lo; n <= n_hi; ++n) {
    auto found = constructed_null_vector(params, n, variant, seed_bound);
    if (!found) found = constructed_null_vector(params, n, variant, 2 * seed_bound);
    if (!found)
      throw PatternViolationError("no conforming null vector of length " + std::to_string(n) +
                                  " within the doubled seed bound");
    NullFitRecord rec;
    rec.n = n;
    rec.max_coord = 0;
    for (long i = 1; i <= 3; ++i) {
      mpz_class m = abs(found->seq.term(i));
      if (m > rec.max_coord) rec.max_coord = m;
    }
    rec.ratio_hi = outward_ratio(*root, rec.max_coord, n);
    if (rec.ratio_hi > rep.fitted_c) rep.fitted_c = rec.ratio_hi;
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace trib
