#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>

#include "trib/basis.hpp"
#include "trib/dyadic.hpp"
#include "trib/errors.hpp"
#include "trib/frobenius.hpp"
#include "trib/params.hpp"
#include "trib/verify/oracles.hpp"

using namespace trib;

TEST_CASE("Frobenius numbers of the classic triples") {
  CHECK(apery_frobenius(3, 5, 7) == 4);
  CHECK(apery_frobenius(4, 6, 7) == 9);
  CHECK(apery_frobenius(2, 3, 4) == 1);
  // a unit generator makes everything representable
  CHECK(apery_frobenius(1, 5, 9) == -1);
  CHECK(apery_frobenius(1, 1, 1) == -1);
  // order does not matter
  CHECK(apery_frobenius(7, 3, 5) == 4);
}

TEST_CASE("positive-representation threshold is the shifted Frobenius number") {
  CHECK(positive_frobenius(2, 3, 4) == 10);
  CHECK(positive_frobenius(4, 6, 7) == 26);
  CHECK(positive_frobenius(1, 1, 1) == 2);
  CHECK(positive_frobenius(3, 5, 7) == 19);
  for (long p = 1; p <= 9; ++p)
    for (long q = p; q <= 9; ++q)
      for (long r = q; r <= 9; ++r) {
        if (std::gcd(std::gcd(p, q), r) != 1) continue;
        CHECK(positive_frobenius(p, q, r) == apery_frobenius(p, q, r) + p + q + r);
      }
}

TEST_CASE("shortest-path Frobenius equals the sieve on a sample") {
  for (auto [p, q, r] : {std::array<long, 3>{3, 5, 7}, {4, 6, 7}, {24, 37, 44}, {11, 13, 59},
                         {5, 7, 9}, {1, 4, 9}}) {
    CHECK(apery_frobenius(p, q, r) == verify::sieve_frobenius(p, q, r));
  }
}

TEST_CASE("Frobenius machinery validates its inputs and caps") {
  CHECK_THROWS_AS(apery_frobenius(2, 4, 6), NotCoprimeError);
  CHECK_THROWS_AS(apery_frobenius(0, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(apery_frobenius(-2, 3, 5), std::invalid_argument);
  // smallest generator beyond the 2^20 residue cap
  mpz_class big20 = (mpz_class(1) << 20) + 1;
  CHECK_THROWS_AS(apery_frobenius(big20, big20 + 1, big20 + 2), ResourceLimitError);
  // any generator beyond the 2^40 cap
  mpz_class big40 = (mpz_class(1) << 40) + 1;
  CHECK_THROWS_AS(apery_frobenius(2, 3, big40), ResourceLimitError);
}

TEST_CASE("minimal isolating relations on the reference triples") {
  Relation p357 = find_relation(3, 5, 7, Isolated::P);
  CHECK(p357.which == Isolated::P);
  CHECK(p357.a == 4);
  CHECK(p357.b == 1);
  CHECK(p357.c == 1);
  Relation q357 = find_relation(3, 5, 7, Isolated::Q);
  CHECK(q357.a == 2);
  CHECK(q357.b == 1);
  CHECK(q357.c == 1);
  Relation p111 = find_relation(1, 1, 1, Isolated::P);
  CHECK(p111.a == 1);
  CHECK(p111.b == 0);
  CHECK(p111.c == 1);
}

TEST_CASE("found relations satisfy their defining equations") {
  for (auto [p, q, r] : {std::array<long, 3>{3, 5, 7}, {4, 6, 7}, {2, 3, 4}, {10, 9, 9}}) {
    Relation rp = find_relation(p, q, r, Isolated::P);
    CHECK(rp.a * p == rp.b * q + rp.c * r);
    CHECK(rp.a >= 1);
    CHECK(rp.b >= 0);
    CHECK(rp.c >= 1);
    Relation rq = find_relation(p, q, r, Isolated::Q);
    CHECK(rq.a * q == rq.b * p + rq.c * r);
  }
}

TEST_CASE("representability bound from a relation pair") {
  Relation rp = find_relation(3, 5, 7, Isolated::P);
  Relation rq = find_relation(3, 5, 7, Isolated::Q);
  CHECK(killingbergtro_bound(3, 5, 7, rp, rq) == 29);
  Relation up = find_relation(1, 1, 1, Isolated::P);
  Relation uq = find_relation(1, 1, 1, Isolated::Q);
  CHECK(killingbergtro_bound(1, 1, 1, up, uq) == 3);
}

TEST_CASE("the bound rejects malformed relations") {
  Relation rp = find_relation(3, 5, 7, Isolated::P);
  Relation rq = find_relation(3, 5, 7, Isolated::Q);
  // swapped roles
  CHECK_THROWS_AS(killingbergtro_bound(3, 5, 7, rq, rp), InvalidRelationError);
  // equation does not hold
  Relation bad = rp;
  bad.b = 2;
  CHECK_THROWS_AS(killingbergtro_bound(3, 5, 7, bad, rq), InvalidRelationError);
  // sign rules: a must be >= 1
  bad = rp;
  bad.a = 0;
  bad.b = 0;
  bad.c = 0;
  CHECK_THROWS_AS(killingbergtro_bound(3, 5, 7, bad, rq), InvalidRelationError);
}

TEST_CASE("sign patterns parse and match") {
  SignPattern p = parse_sign_pattern("+,0-,-");
  CHECK(p.s1 == SignReq::Pos);
  CHECK(p.s2 == SignReq::NonPos);
  CHECK(p.s3 == SignReq::Neg);
  SignPattern q = parse_sign_pattern("0+,*,any");
  CHECK(q.s1 == SignReq::NonNeg);
  CHECK(q.s2 == SignReq::Any);
  CHECK(q.s3 == SignReq::Any);
  CHECK(parse_sign_pattern("0,-0,+0").s1 == SignReq::Zero);
  CHECK(parse_sign_pattern("0,-0,+0").s2 == SignReq::NonPos);
  CHECK(parse_sign_pattern("0,-0,+0").s3 == SignReq::NonNeg);
  CHECK_THROWS_AS(parse_sign_pattern("x,+,-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sign_pattern("+,-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sign_pattern("+,-,-,+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sign_pattern(""), std::invalid_argument);

  CHECK(matches(SignReq::Pos, 1));
  CHECK_FALSE(matches(SignReq::Pos, 0));
  CHECK(matches(SignReq::NonPos, 0));
  CHECK(matches(SignReq::NonPos, -4));
  CHECK_FALSE(matches(SignReq::NonPos, 2));
  CHECK(matches(SignReq::Zero, 0));
  CHECK_FALSE(matches(SignReq::Zero, 1));
  CHECK(matches(SignReq::Any, -7));
}

TEST_CASE("hardcoded null sequences for the shortest lengths are exact") {
  auto terms_of = [](const NullSequence& ns) { return ns.seq.terms(); };
  using V = std::vector<mpz_class>;
  CHECK(terms_of(patterned_null_vector(4, NullVariant::A)) == V{1, 0, -1, 0});
  CHECK(terms_of(patterned_null_vector(5, NullVariant::A)) == V{2, 0, -1, 1, 0});
  CHECK(terms_of(patterned_null_vector(6, NullVariant::A)) == V{2, 0, -1, 1, 0, 0});
  CHECK(terms_of(patterned_null_vector(4, NullVariant::B)) == V{0, 1, -1, 0});
  CHECK(terms_of(patterned_null_vector(5, NullVariant::B)) == V{0, 1, -1, 0, 0});
  CHECK(terms_of(patterned_null_vector(6, NullVariant::B)) == V{-1, 2, -1, 0, 1, 0});
  CHECK_THROWS_AS(patterned_null_vector(3, NullVariant::A), std::invalid_argument);
}

TEST_CASE("constructed null sequences satisfy pattern, terminus and head bound") {
  auto root = root_enclosure(RecurrenceParams());
  for (long n = 7; n <= 60; ++n) {
    NullSequence a = patterned_null_vector(n, NullVariant::A);
    CHECK(a.seq.length() == n);
    CHECK(a.seq.terminus() == 0);
    CHECK(a.seq.term(1) > 0);
    CHECK(a.seq.term(2) <= 0);
    CHECK(a.seq.term(3) < 0);
    mpq_class head_a(mpz_class(a.seq.term(1) * 100), 81);
    head_a.canonicalize();
    CHECK(root->cmp_pow_half(head_a, n) < 0);
    NullSequence b = patterned_null_vector(n, NullVariant::B);
    CHECK(b.seq.term(1) <= 0);
    CHECK(b.seq.term(2) > 0);
    CHECK(b.seq.term(3) < 0);
    mpq_class head_b(mpz_class(b.seq.term(2) * 100), 64);
    head_b.canonicalize();
    CHECK(root->cmp_pow_half(head_b, n) < 0);
  }
}

TEST_CASE("box search finds minimal-norm null sequences consistent with the basis") {
  RecurrenceParams trib;
  SignPattern pat = parse_sign_pattern("+,0-,-");
  for (long n = 7; n <= 24; ++n) {
    // size the box so the tabulated vector is inside the search space; the
    // exhaustive minimum can then never beat it
    NullSequence table = patterned_null_vector(n, NullVariant::A);
    mpz_class table_norm = abs(table.seq.term(1));
    for (long i = 2; i <= 3; ++i)
      if (mpz_class v = abs(table.seq.term(i)); v > table_norm) table_norm = v;
    auto found = null_vector_search(trib, n, pat, table_norm.get_si());
    REQUIRE(found.has_value());
    const IntSequence& seq = found->seq;
    CHECK(seq.terminus() == 0);
    CHECK(seq.term(1) > 0);
    CHECK(seq.term(2) <= 0);
    CHECK(seq.term(3) < 0);
    // terminus 0 is equivalent to a basis-triple relation on the first terms
    BasisTriple t = basis_triple(trib, n);
    CHECK(seq.term(1) * t.p + seq.term(2) * t.q + seq.term(3) * t.r == 0);
    mpz_class search_norm = abs(seq.term(1));
    for (long i = 2; i <= 3; ++i)
      if (mpz_class v = abs(seq.term(i)); v > search_norm) search_norm = v;
    CHECK(search_norm <= table_norm);
  }
  // an impossible pattern inside a tiny box comes back empty
  CHECK_FALSE(null_vector_search(trib, 9, parse_sign_pattern("+,+,+"), 3).has_value());
}

TEST_CASE("threshold growth check on the shortest lengths") {
  ThresholdReport rep4 = threshold_growth_check(4);
  CHECK(rep4.p == 1);
  CHECK(rep4.q == 1);
  CHECK(rep4.r == 1);
  CHECK(rep4.exact_threshold == 2);
  CHECK(rep4.pipeline_bound == 3);  // equals positive_frobenius + 1 here
  CHECK(rep4.certified_below);
  ThresholdReport rep7 = threshold_growth_check(7);
  CHECK(rep7.exact_threshold == 26);
  CHECK(rep7.certified_below);
  CHECK(rep7.exact_threshold ==
        verify::sieve_frobenius(rep7.p, rep7.q, rep7.r) + rep7.p + rep7.q + rep7.r);
  struct Known {
    long k;
    long threshold;
  };
  for (Known kn : {Known{5, 4}, {6, 10}, {8, 61}, {9, 152}, {10, 368}, {13, 5970}}) {
    ThresholdReport rep = threshold_growth_check(kn.k);
    CHECK(rep.exact_threshold == kn.threshold);
    CHECK(rep.certified_below);
    CHECK(rep.pipeline_bound > rep.exact_threshold);
  }
  CHECK_THROWS_AS(threshold_growth_check(3), std::invalid_argument);
}
