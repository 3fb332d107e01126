#include "trib/frobenius.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "trib/basis.hpp"
#include "trib/dyadic.hpp"
#include "trib/errors.hpp"
#include "trib/spectral.hpp"
#include "trib/tables.hpp"

namespace trib {

mpz_class apery_frobenius(const mpz_class& p, const mpz_class& q, const mpz_class& r) {
  if (p < 1 || q < 1 || r < 1)
    throw std::invalid_argument("apery_frobenius needs positive generators");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
  if (g != 1)
    throw NotCoprimeError("gcd(" + p.get_str() + "," + q.get_str() + "," + r.get_str() +
                          ") = " + g.get_str());
  mpz_class gens[3] = {p, q, r};
  std::sort(gens, gens + 3);
  if (gens[0] == 1) return mpz_class(-1);
  if (gens[0] > (1L << 20))
    throw ResourceLimitError("apery_frobenius: smallest generator beyond the 2^20 residue cap");
  if (gens[2] > (mpz_class(1) << 40))
    throw ResourceLimitError("apery_frobenius: generator beyond the 2^40 cap");

  // Per-residue minima modulo the smallest generator: dist[i] is the least
  // representable value congruent to i; edges add one of the other two
  // generators.  All larger members of a residue class follow by adding the
  // modulus, so the largest gap is max(dist) - modulus.
  const unsigned long m = gens[0].get_ui();
  const std::uint64_t e1 = gens[1].get_ui(), e2 = gens[2].get_ui();
  const std::uint64_t kInf = ~std::uint64_t{0};
  std::vector<std::uint64_t> dist(m, kInf);
  using Item = std::pair<std::uint64_t, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[0] = 0;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [d, i] = heap.top();
    heap.pop();
    if (d != dist[i]) continue;
    for (std::uint64_t step : {e1, e2}) {
      std::uint32_t j = static_cast<std::uint32_t>((i + step) % m);
      std::uint64_t nd = d + step;
      if (nd < dist[j]) {
        dist[j] = nd;
        heap.emplace(nd, j);
      }
    }
  }
  std::uint64_t maxd = *std::max_element(dist.begin(), dist.end());
  return mpz_class(static_cast<unsigned long>(maxd)) - mpz_class(m);
}

mpz_class positive_frobenius(const mpz_class& p, const mpz_class& q, const mpz_class& r) {
  return apery_frobenius(p, q, r) + p + q + r;
}

Relation find_relation(const mpz_class& p, const mpz_class& q, const mpz_class& r, Isolated which) {
  const mpz_class& iso = (which == Isolated::P) ? p : q;
  const mpz_class& o1 = (which == Isolated::P) ? q : p;
  const mpz_class& o2 = r;
  if (iso < 1 || o1 < 1 || o2 < 1)
    throw std::invalid_argument("find_relation needs positive generators");
  // smallest a >= 1 with a*iso = b*o1 + c*o2, b >= 0, c >= 1; smallest b wins
  mpz_class cap = o1 * o2 + o1 + o2;  // coprimality guarantees a hit well below
  for (mpz_class a = 1; a <= cap; ++a) {
    mpz_class target = a * iso - o2;  // leave room for c >= 1
    for (mpz_class b = 0; b * o1 <= target; ++b) {
      mpz_class rest = a * iso - b * o1;
      if (rest % o2 == 0) {
        Relation rel;
        rel.which = which;
        rel.a = a;
        rel.b = b;
        rel.c = rest / o2;
        return rel;
      }
    }
  }
  throw Error("find_relation: no relation up to the o1*o2 cap (generators not coprime?)");
}

mpz_class killingbergtro_bound(const mpz_class& p, const mpz_class& q, const mpz_class& r,
                               const Relation& rel_p, const Relation& rel_q) {
  if (rel_p.which != Isolated::P || rel_q.which != Isolated::Q)
    throw InvalidRelationError("relations must isolate p and q respectively");
  if (rel_p.a < 1 || rel_p.c < 1 || rel_p.b < 0)
    throw InvalidRelationError("p-relation sign rules violated");
  if (rel_q.a < 1 || rel_q.c < 1 || rel_q.b < 0)
    throw InvalidRelationError("q-relation sign rules violated");
  if (rel_p.a * p != rel_p.b * q + rel_p.c * r)
    throw InvalidRelationError("p-relation equation does not hold");
  if (rel_q.a * q != rel_q.b * p + rel_q.c * r)
    throw InvalidRelationError("q-relation equation does not hold");
  return rel_p.a * p + rel_q.a * q + r;
}

bool matches(SignReq req, const mpz_class& v) {
  switch (req) {
    case SignReq::Any: return true;
    case SignReq::Pos: return v > 0;
    case SignReq::Neg: return v < 0;
    case SignReq::NonNeg: return v >= 0;
    case SignReq::NonPos: return v <= 0;
    case SignReq::Zero: return v == 0;
  }
  return false;
}

SignPattern parse_sign_pattern(const std::string& text) {
  std::vector<SignReq> reqs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    // trim spaces
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok == "+")
      reqs.push_back(SignReq::Pos);
    else if (tok == "-")
      reqs.push_back(SignReq::Neg);
    else if (tok == "0")
      reqs.push_back(SignReq::Zero);
    else if (tok == "0+" || tok == "+0")
      reqs.push_back(SignReq::NonNeg);
    else if (tok == "0-" || tok == "-0")
      reqs.push_back(SignReq::NonPos);
    else if (tok == "*" || tok == "any")
      reqs.push_back(SignReq::Any);
    else
      throw std::invalid_argument("bad sign token '" + tok + "' in pattern '" + text + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (reqs.size() != 3)
    throw std::invalid_argument("sign pattern needs exactly three comma-separated tokens");
  return {reqs[0], reqs[1], reqs[2]};
}

namespace {

NullSequence hardcoded_null_vector(long n, NullVariant variant) {
  RecurrenceParams trib;
  auto make = [&](std::vector<long> terms, SignPattern pat) {
    std::vector<mpz_class> t(terms.begin(), terms.end());
    return NullSequence{IntSequence(trib, std::move(t)), pat};
  };
  SignPattern pat_a{SignReq::Pos, SignReq::NonPos, SignReq::Neg};
  SignPattern pat_b{SignReq::NonPos, SignReq::Pos, SignReq::Neg};
  if (variant == NullVariant::A) {
    if (n == 4) return make({1, 0, -1, 0}, pat_a);
    if (n == 5) return make({2, 0, -1, 1, 0}, pat_a);
    return make({2, 0, -1, 1, 0, 0}, pat_a);
  }
  if (n == 4) return make({0, 1, -1, 0}, pat_b);
  if (n == 5) return make({0, 1, -1, 0, 0}, pat_b);
  return make({-1, 2, -1, 0, 1, 0}, pat_b);
}

// certified: head < limit_num/limit_den * eta1^{n/2}
bool head_below(const RootEnclosure& root, const mpz_class& head, long num, long den, long n) {
  mpq_class x(mpz_class(head * den), mpz_class(num));
  x.canonicalize();
  return root.cmp_pow_half(x, n) < 0;
}

}  // namespace

NullSequence patterned_null_vector(long n, NullVariant variant) {
  if (n < 4) throw std::invalid_argument("patterned_null_vector needs n >= 4");
  if (n < 7) return hardcoded_null_vector(n, variant);

  RecurrenceParams trib;
  SpectralData spec = cubic_roots(trib);
  int table = (variant == NullVariant::A) ? 1 : 2;
  SignPattern pat = (variant == NullVariant::A)
                        ? SignPattern{SignReq::Pos, SignReq::NonPos, SignReq::Neg}
                        : SignPattern{SignReq::NonPos, SignReq::Pos, SignReq::Neg};

  // candidate rows from the fractional part of delta*n/(2*pi)
  Ball turns = spec.delta * Ball::point(static_cast<double>(n)) / ball_two_pi();
  std::vector<int> rows;
  for (Ball frac : unit_frac_candidates(turns))
    for (int row : select_rows(table, frac))
      if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(row);

  const auto& tab1 = table1();
  const auto& tab2 = table2();
  for (int row : rows) {
    long k = (table == 1) ? tab1[static_cast<std::size_t>(row - 1)].k
                          : tab2[static_cast<std::size_t>(row - 1)].k;
    long l = (table == 1) ? tab1[static_cast<std::size_t>(row - 1)].l
                          : tab2[static_cast<std::size_t>(row - 1)].l;
    std::vector<mpz_class> rev = reverse_from_zero(trib, k, l, n);
    std::vector<mpz_class> fwd(rev.rbegin(), rev.rend());
    IntSequence seq(trib, std::move(fwd));
    bool signs_ok = matches(pat.s1, seq.term(1)) && matches(pat.s2, seq.term(2)) &&
                    matches(pat.s3, seq.term(3));
    if (!signs_ok) continue;
    const mpz_class& head = (variant == NullVariant::A) ? seq.term(1) : seq.term(2);
    bool magnitude_ok = (variant == NullVariant::A)
                            ? head_below(*spec.root, head, 81, 100, n)  // head < 0.81*eta1^{n/2}
                            : head_below(*spec.root, head, 64, 100, n);
    if (!magnitude_ok) continue;
    return NullSequence{std::move(seq), pat};
  }
  throw PatternViolationError("no table row yields a verified length-" + std::to_string(n) +
                              " null sequence for variant " +
                              (variant == NullVariant::A ? std::string("A") : std::string("B")));
}

std::optional<NullSequence> null_vector_search(const RecurrenceParams& params, long n,
                                               const SignPattern& pattern, long box_bound) {
  if (n < 4 || box_bound < 0)
    throw std::invalid_argument("null_vector_search needs n >= 4, box_bound >= 0");
  BasisTriple t = basis_triple(params, n);

  auto bounds = [&](SignReq s) -> std::pair<long, long> {
    switch (s) {
      case SignReq::Pos: return {1, box_bound};
      case SignReq::Neg: return {-box_bound, -1};
      case SignReq::NonNeg: return {0, box_bound};
      case SignReq::NonPos: return {-box_bound, 0};
      case SignReq::Zero: return {0, 0};
      case SignReq::Any: return {-box_bound, box_bound};
    }
    return {0, 0};
  };

  auto [lo1, hi1] = bounds(pattern.s1);
  auto [lo2, hi2] = bounds(pattern.s2);
  bool have = false;
  mpz_class best_norm, best1, best2, best3;
  mpz_class rhs, a3, norm;
  for (long a1 = lo1; a1 <= hi1; ++a1) {
    for (long a2 = lo2; a2 <= hi2; ++a2) {
      rhs = -(a1 * t.p + a2 * t.q);
      if (t.r == 0) {
        if (rhs != 0) continue;
        // a3 unconstrained by the equation: smallest magnitude fitting the sign
        switch (pattern.s3) {
          case SignReq::Pos: a3 = 1; break;
          case SignReq::Neg: a3 = -1; break;
          default: a3 = 0; break;
        }
      } else {
        if (rhs % t.r != 0) continue;
        a3 = rhs / t.r;
        if (!matches(pattern.s3, a3)) continue;
      }
      if (a1 == 0 && a2 == 0 && a3 == 0) continue;  // the trivial vector
      norm = abs(a3);
      long big12 = std::max(std::labs(a1), std::labs(a2));
      if (norm < big12) norm = big12;
      if (!have || norm < best_norm) {
        have = true;
        best_norm = norm;
        best1 = a1;
        best2 = a2;
        best3 = a3;
      }
    }
  }
  if (!have) return std::nullopt;
  IntSequence seq = extend_forward(params, {best1, best2, best3}, n);
  if (seq.terminus() != 0) throw Error("null_vector_search: terminus/basis mismatch");
  return NullSequence{std::move(seq), pattern};
}

ThresholdReport threshold_growth_check(long k) {
  if (k < 4) throw std::invalid_argument("threshold_growth_check needs k >= 4");
  RecurrenceParams trib;
  BasisTriple t = basis_triple(trib, k);
  ThresholdReport rep;
  rep.k = k;
  rep.p = t.p;
  rep.q = t.q;
  rep.r = t.r;
  rep.exact_threshold = positive_frobenius(t.p, t.q, t.r);

  NullSequence va = patterned_null_vector(k, NullVariant::A);
  NullSequence vb = patterned_null_vector(k, NullVariant::B);
  Relation rel_p{Isolated::P, va.seq.term(1), -va.seq.term(2), -va.seq.term(3)};
  Relation rel_q{Isolated::Q, vb.seq.term(2), -vb.seq.term(1), -vb.seq.term(3)};
  rep.pipeline_bound = killingbergtro_bound(t.p, t.q, t.r, rel_p, rel_q);

  auto root = root_enclosure(trib);
  rep.certified_below =
      root->cmp_pow_half(mpq_class(mpz_class(5 * rep.exact_threshold)), 3 * k) < 0;
  return rep;
}

}  // namespace trib
