#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "trib/ball.hpp"
#include "trib/errors.hpp"
#include "trib/params.hpp"
#include "trib/sequence.hpp"
#include "trib/spectral.hpp"
#include "trib/tables.hpp"

using namespace trib;

namespace {
const double kTwoPi = 6.283185307179586476925;
}

TEST_CASE("tribonacci spectral constants match the frozen references") {
  SpectralData s = cubic_roots(RecurrenceParams());
  CHECK(s.eta1.within(1.8392867552141611326, 1e-12));
  CHECK(s.delta.within(2.1762335454918703985, 1e-12));
  CHECK(s.psi1.re.within(0.0226759803428332, 1e-12));
  CHECK(s.psi1.im.within(-0.217024723192889, 1e-12));
  CHECK(s.zeta1.re.within(0.190790038840304, 1e-12));
  CHECK(s.zeta1.im.within(-0.0187005831117398, 1e-12));
  CHECK(s.psi_r.within(0.954648039314334, 1e-12));
  CHECK(s.zeta_r.within(0.618419922319393, 1e-12));
  // delta / 2*pi, the rotation per index in turns
  Ball turns = s.delta / ball_two_pi();
  CHECK(turns.within(0.3463583260874322526, 1e-12));
  // eta2 = eta1^{-1/2} * e^{i*delta}: |eta2|^2 * eta1 = c = 1
  Ball mod2 = s.eta2.re * s.eta2.re + s.eta2.im * s.eta2.im;
  CHECK((mod2 * s.eta1).contains(1.0));
  CHECK(s.delta.certainly_gt(1.5707963267948966));  // pi/2
  CHECK(s.delta.certainly_lt(3.14159265358979324));  // pi
}

TEST_CASE("the two derivations of psi1 and zeta1 agree") {
  SpectralData s = cubic_roots(RecurrenceParams());
  auto [psi_general, zeta_general] = closed_form_constants(s, false);
  auto [psi_closed, zeta_closed] = closed_form_constants(s, true);
  auto overlap = [](const Ball& x, const Ball& y) {
    return x.lo() <= y.hi() && y.lo() <= x.hi();
  };
  CHECK(overlap(psi_general.re, psi_closed.re));
  CHECK(overlap(psi_general.im, psi_closed.im));
  CHECK(overlap(zeta_general.re, zeta_closed.re));
  CHECK(overlap(zeta_general.im, zeta_closed.im));
  CHECK(psi_closed.re.rad < 1e-10);
  CHECK(zeta_closed.re.rad < 1e-10);
}

TEST_CASE("alpha + beta*cos(gamma) recovers b*k + c*l at index zero") {
  for (const RecurrenceParams& params :
       {RecurrenceParams(1, 1, 1), RecurrenceParams(2, 1, 1), RecurrenceParams(1, 2, 1)}) {
    SpectralData s = cubic_roots(params);
    for (long k = -3; k <= 3; ++k)
      for (long l = -3; l <= 3; ++l) {
        AlphaBetaGamma g = alpha_beta_gamma(s, k, l);
        Ball b0 = g.alpha + g.beta * bcos(g.gamma);
        CHECK(b0.contains(static_cast<double>(params.b * k + params.c * l)));
      }
  }
}

TEST_CASE("alpha_beta_gamma matches the first reference-table rows") {
  SpectralData s = cubic_roots(RecurrenceParams());
  // table 1 row 1: (k, l) = (0, 1)
  AlphaBetaGamma g = alpha_beta_gamma(s, 0, 1);
  CHECK(g.alpha.within(0.6184, 5e-4));
  CHECK(g.beta.within(0.3834, 5e-4));
  CHECK(g.gamma.within(-0.0977, 5e-4));
  // the zero pair fixes gamma to 0
  AlphaBetaGamma zero = alpha_beta_gamma(s, 0, 0);
  CHECK(zero.alpha.contains(0.0));
  CHECK(zero.beta.contains(0.0));
  CHECK(zero.gamma.mid == 0.0);
}

TEST_CASE("closed-form evaluation encloses the exact backward terms") {
  RecurrenceParams trib;
  SpectralData s = cubic_roots(trib);
  for (long k : {-7L, 2L})
    for (long l : {3L, -5L}) {
      const long n = 24;
      std::vector<mpz_class> rev = reverse_from_zero(trib, k, l, n);
      for (long i = 1; i <= n; ++i) {
        Ball v = closed_form_eval(s, k, l, i, n);
        CHECK(v.contains(rev[static_cast<std::size_t>(n - i)].get_d()));
      }
    }
}

TEST_CASE("closed-form evaluation rejects c != 1 and i > n") {
  SpectralData s112 = cubic_roots(RecurrenceParams(1, 1, 2));
  CHECK_THROWS_AS(closed_form_eval(s112, 1, 1, 1, 5), std::invalid_argument);
  SpectralData s = cubic_roots(RecurrenceParams());
  CHECK_THROWS_AS(closed_form_eval(s, 1, 1, 6, 5), std::invalid_argument);
}

TEST_CASE("amplitude scan: no violations, frozen minima on the 100-grid") {
  SpectralData s = cubic_roots(RecurrenceParams());
  AmplitudeScanReport rep = amplitude_scan(s, 100);
  CHECK(rep.grid_bound == 100);
  CHECK(rep.checked == 201 * 201 - 1);
  CHECK(rep.violations == 0);
  CHECK(rep.min_ratio == doctest::Approx(0.2577361161).epsilon(1e-9));
  CHECK(rep.argmin_k == -54);
  CHECK(rep.argmin_l == 67);
  CHECK(rep.min_diag_ratio == doctest::Approx(0.2577361161).epsilon(1e-9));
  CHECK(rep.diag_k == 54);
  CHECK(rep.diag_l == -67);
  // the announced 1/31 margin is comfortably below the observed minimum
  CHECK(rep.min_ratio > 1.0 / 31.0);
}

TEST_CASE("consecutive-pair lower bound holds on a small exact grid") {
  PairBoundReport rep = pair_bound_grid_check(10, 20);
  CHECK(rep.kl_bound == 10);
  CHECK(rep.n_max == 20);
  CHECK(rep.violations == 0);
  CHECK(rep.checked > 0);
}

TEST_CASE("every reference table row verifies within 5e-4") {
  SpectralData s = cubic_roots(RecurrenceParams());
  for (int table : {1, 2}) {
    int rows = (table == 1) ? 11 : 9;
    for (int row = 1; row <= rows; ++row) {
      RowReport rep = verify_table_row(s, table, row);
      CHECK(rep.worst_diff < 5e-4);
      CHECK(rep.table == table);
      CHECK(rep.row == row);
    }
  }
  CHECK_THROWS_AS(verify_table_row(s, 1, 12), std::invalid_argument);
  CHECK_THROWS_AS(verify_table_row(s, 3, 1), std::invalid_argument);
}

TEST_CASE("table 2 stores the conjugate phase") {
  SpectralData s = cubic_roots(RecurrenceParams());
  const auto& rows = table2();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    AlphaBetaGamma g = alpha_beta_gamma(s, rows[i].k, rows[i].l);
    double negated = std::remainder(-g.gamma.mid - rows[i].gamma, kTwoPi);
    CHECK(std::fabs(negated) < 5e-4);
  }
}

TEST_CASE("table windows tile [0, 1) without gaps") {
  for (int table : {1, 2}) {
    double cursor = 0.0;
    auto check_rows = [&](const auto& rows) {
      for (const TableRow& row : rows) {
        CHECK(row.t0 == doctest::Approx(cursor).epsilon(1e-12));
        CHECK(row.t1 > row.t0);
        cursor = row.t1;
      }
    };
    if (table == 1) check_rows(table1());
    else check_rows(table2());
    CHECK(cursor == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("select_rows handles interior points and straddled boundaries") {
  // interior: a point inside row 1 of table 1
  double t0 = table1()[0].t0, t1 = table1()[0].t1;
  std::vector<int> rows = select_rows(1, Ball::point((t0 + t1) / 2));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == 1);
  // straddling the row-1/row-2 boundary must offer both rows
  rows = select_rows(1, Ball::with_rad(t1, 1e-9));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == 1);
  CHECK(rows[1] == 2);
}

TEST_CASE("unit_frac_candidates splits only at integer straddles") {
  std::vector<Ball> one = unit_frac_candidates(Ball::point(2.3));
  REQUIRE(one.size() == 1);
  CHECK(one[0].contains(0.3));
  std::vector<Ball> two = unit_frac_candidates(Ball::with_rad(3.0, 1e-9));
  REQUIRE(two.size() == 2);
  // one candidate near 0, the other near 1
  CHECK(two[0].lo() <= 1e-8);
  CHECK(two[1].hi() >= 1.0 - 1e-8);
}
