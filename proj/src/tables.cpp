#include "trib/tables.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "trib/errors.hpp"

namespace trib {

const std::array<TableRow, 11>& table1() {
  static const std::array<TableRow, 11> rows = {{
      {0.00, 0.06, 0, 1, 0.6184, 0.3834, -0.0977, 0.3410, -0.0500, -0.1694},
      {0.06, 0.16, -1, 2, 0.2822, 0.8027, 0.4640, 0.6879, -0.0515, -0.2163},
      {0.16, 0.22, -1, 1, -0.3362, 0.5200, 0.8677, 0.4526, -0.0471, -0.2482},
      {0.22, 0.35, -1, 0, -0.9546, 0.4364, 1.6749, 0.3778, -0.0354, -0.0294},
      {0.35, 0.45, -1, -1, -1.5731, 0.6360, 2.3067, 0.5517, -0.0538, -0.1588},
      {0.45, 0.56, 0, -1, -0.6184, 0.3834, 3.0439, 0.3410, -0.0500, -0.0548},
      {0.56, 0.66, 1, -2, -0.2822, 0.8027, -2.6776, 0.6879, -0.0515, -0.2163},
      {0.66, 0.72, 1, -1, 0.3362, 0.5200, -2.2739, 0.4526, -0.0471, -0.2482},
      {0.72, 0.85, 1, 0, 0.9546, 0.4364, -1.4667, 0.3778, -0.0354, -0.0294},
      {0.85, 0.95, 1, 1, 1.5731, 0.6360, -0.8349, 0.5517, -0.0538, -0.1588},
      {0.95, 1.00, 0, 1, 0.6184, 0.3834, -0.0977, 0.3745, -0.1864, -0.0548},
  }};
  return rows;
}

const std::array<TableRow, 9>& table2() {
  static const std::array<TableRow, 9> rows = {{
      {0.00, 0.06, 1, -1, 0.3362, 0.5200, 2.2739, -0.3362, 0.4625, -0.0678},
      {0.06, 0.19, 1, 0, 0.9546, 0.4364, 1.4667, -0.1176, 0.3862, -0.0528},
      {0.19, 0.29, 1, 1, 1.5731, 0.6360, 0.8349, -0.2812, 0.5639, -0.0791},
      {0.29, 0.41, 0, 1, 0.6184, 0.3834, 0.0977, -0.1311, 0.3369, -0.0413},
      {0.41, 0.56, -1, 1, -0.3362, 0.5200, -0.8677, -0.0714, 0.4625, -0.0678},
      {0.56, 0.69, -1, 0, -0.9546, 0.4364, -1.6749, -0.1176, 0.3862, -0.0528},
      {0.69, 0.79, -1, -1, -1.5731, 0.6360, -2.3067, -0.2812, 0.5639, -0.0791},
      {0.79, 0.91, 0, -1, -0.6184, 0.3834, -3.0439, -0.1311, 0.3369, -0.0413},
      {0.91, 1.00, 1, -1, 0.3362, 0.5200, 2.2739, -0.0714, 0.4641, -0.2528},
  }};
  return rows;
}

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
// membership slop for critical points; dwarfs the double-pi error, dwarfed by
// every actual margin in the tables
constexpr double kSlop = 1e-9;

// Certified enclosure of max cos(phase - 2*pi*f) over f in [t0, t1].
Ball cos_window_max(Ball phase, double t0, double t1) {
  Ball a = phase - Ball::point(kTwoPi * t1);  // window low end
  Ball b = phase - Ball::point(kTwoPi * t0);  // window high end
  Ball ca = bcos(a), cb = bcos(b);
  double lo = std::fmax(ca.lo(), cb.lo());  // endpoint values are achieved
  double hi = std::fmax(ca.hi(), cb.hi());
  // interior maxima at even multiples of pi
  double m0 = std::ceil(a.lo() / kTwoPi - kSlop);
  double m1 = std::floor(b.hi() / kTwoPi + kSlop);
  for (double m = m0; m <= m1; m += 1.0) {
    double theta = kTwoPi * m;
    bool possibly = theta >= a.lo() - kSlop && theta <= b.hi() + kSlop;
    bool certainly = theta >= a.hi() + kSlop && theta <= b.lo() - kSlop;
    if (possibly) hi = 1.0;
    if (certainly) lo = std::fmax(lo, 1.0);
  }
  return Ball::interval(std::fmax(lo, -1.0), std::fmin(hi, 1.0));
}

const TableRow& row_at(int table, int row_index) {
  if (table == 1) {
    const auto& t = table1();
    if (row_index < 1 || row_index > static_cast<int>(t.size()))
      throw std::invalid_argument("table 1 row index out of range");
    return t[static_cast<std::size_t>(row_index - 1)];
  }
  if (table == 2) {
    const auto& t = table2();
    if (row_index < 1 || row_index > static_cast<int>(t.size()))
      throw std::invalid_argument("table 2 row index out of range");
    return t[static_cast<std::size_t>(row_index - 1)];
  }
  throw std::invalid_argument("table must be 1 or 2");
}
}  // namespace

Ball cos_range_extremum(Ball beta, Ball phase, double t0, double t1, bool want_max) {
  if (!(t0 < t1)) throw std::invalid_argument("cos_range_extremum needs t0 < t1");
  // min over f of beta*cos(theta) = -max over f of beta*cos(theta - pi)
  Ball m = cos_window_max(want_max ? phase : phase - ball_pi(), t0, t1);
  Ball v = beta * m;
  return want_max ? v : -v;
}

RowReport verify_table_row(const SpectralData& spec, int table, int row_index) {
  const TableRow& row = row_at(table, row_index);
  RowReport rep;
  rep.table = table;
  rep.row = row_index;
  rep.computed = alpha_beta_gamma(spec, row.k, row.l);
  const double tol = 5e-4;
  std::string where = "table " + std::to_string(table) + " row " + std::to_string(row_index);

  auto check = [&](const char* field, double diff) {
    rep.worst_diff = std::fmax(rep.worst_diff, diff);
    if (!(diff <= tol))
      throw RowMismatchError(where + " field " + field + ": off by " + std::to_string(diff));
  };
  auto check_ball = [&](const char* field, Ball value, double stored) {
    check(field, std::fabs(value.mid - stored) + value.rad);
  };

  check_ball("alpha", rep.computed.alpha, row.alpha);
  check_ball("beta", rep.computed.beta, row.beta);
  // gamma is an angle: compare modulo 2*pi; table 2 stores the conjugate
  double gmid = (table == 2) ? -rep.computed.gamma.mid : rep.computed.gamma.mid;
  check("gamma", std::fabs(std::remainder(gmid - row.gamma, kTwoPi)) + rep.computed.gamma.rad);

  Ball* slots[3] = {&rep.x0, &rep.x1, &rep.x2};
  const double stored_x[3] = {row.x0, row.x1, row.x2};
  for (int j = 0; j < 3; ++j) {
    // x_j bounds beta*cos(gamma - delta*(n-j)) = beta*cos(gamma + j*delta - 2*pi*f)
    Ball phase = rep.computed.gamma + static_cast<double>(j) * spec.delta;
    // table 1: x0 is the window minimum, x1/x2 maxima; table 2: x1 minimum
    bool want_max = (table == 1) ? (j != 0) : (j != 1);
    Ball x = cos_range_extremum(rep.computed.beta, phase, row.t0, row.t1, want_max);
    *slots[j] = x;
    const char* names[3] = {"x0", "x1", "x2"};
    check_ball(names[j], x, stored_x[j]);
  }

  // certified sign claims backing the null-vector construction
  bool ok;
  if (table == 1)
    ok = rep.x0.lo() > 0.34 && rep.x1.hi() < -0.035 && rep.x2.hi() < -0.029;
  else
    ok = rep.x0.hi() < -0.071 && rep.x1.lo() > 0.33 && rep.x2.hi() < -0.041;
  if (!ok) throw RowMismatchError(where + ": certified extremum misses the sign margin");
  return rep;
}

std::vector<int> select_rows(int table, Ball frac) {
  std::vector<int> out;
  auto scan = [&](const auto& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      // half-open windows [t0, t1); overlap test widened by the ball
      if (frac.hi() >= rows[i].t0 && frac.lo() < rows[i].t1)
        out.push_back(static_cast<int>(i) + 1);
    }
  };
  if (table == 1)
    scan(table1());
  else if (table == 2)
    scan(table2());
  else
    throw std::invalid_argument("table must be 1 or 2");
  return out;
}

std::vector<Ball> unit_frac_candidates(Ball x) {
  double flo = std::floor(x.lo()), fhi = std::floor(x.hi());
  if (flo == fhi) return {Ball::interval(x.lo() - flo, x.hi() - flo)};
  // enclosure straddles an integer: value is near 0 and/or near 1
  return {Ball::interval(0.0, x.hi() - fhi), Ball::interval(x.lo() - flo, 1.0)};
}

}  // namespace trib
