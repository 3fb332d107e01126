#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <cmath>

#include "trib/ball.hpp"
#include "trib/dyadic.hpp"
#include "trib/errors.hpp"
#include "trib/params.hpp"

using namespace trib;

TEST_CASE("tribonacci root enclosure brackets the known digits") {
  auto root = root_enclosure(RecurrenceParams());
  CHECK_FALSE(root->exact());
  // eta1 = 1.83928675521416113... to 20 digits
  mpq_class known_lo(mpz_class("18392867552141611325"), mpz_class("10000000000000000000"));
  mpq_class known_hi(mpz_class("18392867552141611326"), mpz_class("10000000000000000000"));
  CHECK(root->lower() > mpq_class(18, 10));
  CHECK(root->upper() < mpq_class(19, 10));
  CHECK(root->lower() <= known_hi);
  CHECK(root->upper() >= known_lo);
  CHECK(root->mid() == doctest::Approx(1.8392867552141611).epsilon(1e-14));
  // rad() reports interval width plus double-conversion slack, so it is
  // small but never below ~1e-15
  CHECK(root->rad() > 0.0);
  CHECK(root->rad() < 1e-12);
}

TEST_CASE("rational root collapses to an exact point") {
  // x^3 = x^2 + x + 2 factors as (x - 2)(x^2 + x + 1)
  auto root = root_enclosure(RecurrenceParams(1, 1, 2));
  CHECK(root->exact());
  CHECK(root->lower() == 2);
  CHECK(root->upper() == 2);
  CHECK(root->mid() == 2.0);
  CHECK(root->rad() == 0.0);
}

TEST_CASE("root enclosure rejects nonnegative discriminants") {
  // (0,2,1): discriminant 5 > 0, three real roots
  CHECK_THROWS_AS(root_enclosure(RecurrenceParams(0, 2, 1)), MultipleRealRootsError);
}

TEST_CASE("pow_bounds sandwich the true power and are exact for rational roots") {
  auto trib = root_enclosure(RecurrenceParams());
  mpq_class lo, hi;
  trib->pow_bounds(0, lo, hi);
  CHECK(lo == 1);
  CHECK(hi == 1);
  trib->pow_bounds(2, lo, hi);
  // eta1^2 = 3.3829757679...
  CHECK(lo > mpq_class(33829, 10000));
  CHECK(hi < mpq_class(33830, 10000));
  CHECK(lo < hi);

  auto two = root_enclosure(RecurrenceParams(1, 1, 2));
  two->pow_bounds(5, lo, hi);
  CHECK(lo == 32);
  CHECK(hi == 32);
}

TEST_CASE("cmp_pow_half decides strictly and detects exact equality") {
  auto trib = root_enclosure(RecurrenceParams());
  // eta1^{1/2} = 1.35620...
  CHECK(trib->cmp_pow_half(mpq_class(14, 10), 1) > 0);
  CHECK(trib->cmp_pow_half(mpq_class(13, 10), 1) < 0);
  // eta1^1
  CHECK(trib->cmp_pow_half(mpq_class(2), 2) > 0);
  CHECK(trib->cmp_pow_half(mpq_class(18, 10), 2) < 0);
  // eta1^{3/2} = 2.49435...
  CHECK(trib->cmp_pow_half(mpq_class(25, 10), 3) > 0);
  CHECK(trib->cmp_pow_half(mpq_class(249, 100), 3) < 0);

  auto two = root_enclosure(RecurrenceParams(1, 1, 2));
  CHECK(two->cmp_pow_half(mpq_class(4), 4) == 0);   // 2^2
  CHECK(two->cmp_pow_half(mpq_class(2), 2) == 0);   // 2^1
  CHECK(two->cmp_pow_half(mpq_class(3), 3) > 0);    // 2^{3/2} = 2.828...
  CHECK(two->cmp_pow_half(mpq_class(28, 10), 3) < 0);
}

TEST_CASE("degenerate comparison hits the refinement cap instead of spinning") {
  // x^3 = 2: the root is irrational but its cube is exactly 2, so the even
  // query 2 vs eta1^{6/2} can never be decided by interval refinement.
  auto cbrt2 = root_enclosure(RecurrenceParams(0, 0, 2));
  CHECK(cbrt2->cmp_pow_half(mpq_class(17, 10), 3) > 0);  // 2^{1/2} = 1.414...
  CHECK_THROWS_AS(cbrt2->cmp_pow_half(mpq_class(2), 6), Error);
}

TEST_CASE("certified ceil and floor of root-power quotients") {
  auto trib = root_enclosure(RecurrenceParams());
  // 100 / eta1 = 54.3689...
  CHECK(trib->ceil_div_pow_half(100, 2) == 55);
  // eta1^2 = 3.38297...
  CHECK(trib->floor_pow_half_div(4, 1) == 3);
  // eta1^10 = 443.09...
  CHECK(trib->floor_pow_half_div(20, 100) == 4);
  CHECK(trib->ceil_div_pow_half(0, 2) == 0);

  auto two = root_enclosure(RecurrenceParams(1, 1, 2));
  CHECK(two->ceil_div_pow_half(7, 6) == 1);   // ceil(7/8)
  CHECK(two->ceil_div_pow_half(16, 6) == 2);  // ceil(16/8)
  CHECK(two->ceil_div_pow_half(17, 6) == 3);  // ceil(17/8)
  CHECK(two->floor_pow_half_div(6, 3) == 2);  // floor(8/3)
}

TEST_CASE("pow_half_interval is outward and consistent with cmp_pow_half") {
  auto trib = root_enclosure(RecurrenceParams());
  for (long j : {0L, 1L, 2L, 3L, 7L, 20L, 41L}) {
    double lo = 0, hi = 0;
    trib->pow_half_interval(j, lo, hi);
    CHECK(lo <= hi);
    CHECK(lo > 0);
    double approx = std::pow(1.8392867552141611, j / 2.0);
    CHECK(lo <= approx * (1 + 1e-12));
    CHECK(hi >= approx * (1 - 1e-12));
    // the rational comparator must agree with the double bounds
    if (j > 0) {
      CHECK(trib->cmp_pow_half(mpq_class(hi * 2), j) > 0);
      CHECK(trib->cmp_pow_half(mpq_class(lo / 2), j) < 0);
    }
  }
}

TEST_CASE("balls pad every operation outward") {
  Ball a = Ball::point(0.1);
  Ball b = Ball::point(10.0);
  CHECK((a * b).contains(1.0));
  CHECK((a + b).contains(10.1));
  CHECK((b - a).contains(9.9));
  CHECK(bsqrt(Ball::point(2.0)).contains(1.4142135623730951));
  CHECK(babs(Ball::point(-3.0)).contains(3.0));
  // interval straddling zero: |.| keeps the magnitude bound
  Ball s = Ball::interval(-2.0, 1.0);
  Ball as = babs(s);
  CHECK(as.lo() <= 0.0);
  CHECK(as.contains(2.0));
}

TEST_CASE("ball division and sqrt refuse zero-crossing inputs") {
  CHECK_THROWS_AS(Ball::point(1.0) / Ball::interval(-1.0, 1.0), Error);
  CHECK_THROWS_AS(bsqrt(Ball::interval(-1.0, 1.0)), Error);
  Ball q = Ball::point(1.0) / Ball::point(3.0);
  CHECK(q.contains(1.0 / 3.0));
}

TEST_CASE("bcos is range-exact across interior extrema") {
  // window containing 0: the max must reach 1
  Ball c0 = bcos(Ball::interval(-0.5, 0.5));
  CHECK(c0.contains(1.0));
  CHECK(c0.lo() <= std::cos(0.5) + 1e-12);
  // window containing pi: the min must reach -1
  Ball cpi = bcos(Ball::interval(3.0, 3.3));
  CHECK(cpi.contains(-1.0));
  // monotone window: endpoints bound the range
  Ball cm = bcos(Ball::interval(0.5, 1.0));
  CHECK(cm.contains(std::cos(0.5)));
  CHECK(cm.contains(std::cos(0.75)));
  CHECK(cm.contains(std::cos(1.0)));
  CHECK(cm.hi() < 0.883);
  CHECK(cm.lo() > 0.54);
}

TEST_CASE("batan2 tracks the principal angle and refuses the branch cut") {
  Ball a = batan2(Ball::point(1.0), Ball::point(1.0));
  CHECK(a.contains(0.7853981633974483));
  Ball b = batan2(Ball::with_rad(0.6062907292071994, 1e-15),
                  Ball::with_rad(-0.41964337760708057, 1e-15));
  CHECK(b.contains(2.1762335454918704));  // the tribonacci rotation angle
  CHECK_THROWS_AS(batan2(Ball::point(0.0), Ball::point(0.0)), Error);
  CHECK_THROWS_AS(batan2(Ball::interval(-0.1, 0.1), Ball::point(-1.0)), Error);
}

TEST_CASE("ball predicates certify only when the whole ball qualifies") {
  Ball b = Ball::with_rad(1.0, 0.25);
  CHECK(b.within(1.0, 0.26));
  CHECK_FALSE(b.within(1.0, 0.2));
  CHECK(b.certainly_lt(1.3));
  CHECK_FALSE(b.certainly_lt(1.2));
  CHECK(b.certainly_gt(0.7));
  CHECK(b.certainly_nonzero());
  CHECK_FALSE(Ball::interval(-0.1, 0.1).certainly_nonzero());
}
