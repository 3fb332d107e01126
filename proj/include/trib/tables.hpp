#pragma once

// The two reference tables of interval rows used by the null-vector
// construction: each row covers a window [t0, t1) of the fractional part of
// delta*n/(2*pi), names the seed pair (k, l) to use there, and records the
// row constants together with certified extrema x0, x1, x2 of
// beta*cos(gamma - 2*pi*f + j*delta) over the window (j = 0, 1, 2).

#include <array>
#include <vector>

#include "trib/ball.hpp"
#include "trib/spectral.hpp"

namespace trib {

struct TableRow {
  double t0 = 0, t1 = 0;  // fractional-part window
  long k = 0, l = 0;
  double alpha = 0, beta = 0, gamma = 0;  // reference values, 4 decimals
  double x0 = 0, x1 = 0, x2 = 0;          // reference extrema, 4 decimals
};

const std::array<TableRow, 11>& table1();  // rows for the (+, -, -) pattern
const std::array<TableRow, 9>& table2();   // rows for the (-, +, -) pattern

struct RowReport {
  int table = 0;
  int row = 0;  // 1-based
  AlphaBetaGamma computed;
  Ball x0, x1, x2;          // certified extremum enclosures
  double worst_diff = 0.0;  // max over the six compared columns
};

// Recomputes every column of the row from (k, l) and the window endpoints and
// compares against the stored values within 5e-4; also certifies the row's
// sign claims (table 1: x0 > 0.34, x1 < -0.035, x2 < -0.029; table 2:
// x0 < -0.071, x1 > 0.33, x2 < -0.041).  Throws RowMismatchError naming the
// offending field.  Table 2 stores gamma in the conjugate convention, so its
// gamma column is compared against the negated computed phase.
RowReport verify_table_row(const SpectralData& spec, int table, int row_index);

// Certified extremum of beta*cos(phase - 2*pi*f) over f in [t0, t1].
Ball cos_range_extremum(Ball beta, Ball phase, double t0, double t1, bool want_max);

// 1-based indices of the rows whose half-open window [t0, t1) may contain the
// fractional value; two rows when the ball straddles a boundary.
std::vector<int> select_rows(int table, Ball frac);

// Fractional-part candidates of a ball: one ball normally, two when the
// enclosure straddles an integer (then the value is near 0 and/or near 1).
std::vector<Ball> unit_frac_candidates(Ball x);

}  // namespace trib
