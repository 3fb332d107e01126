#include "trib/ball.hpp"

#include <algorithm>
#include <cmath>

#include "trib/errors.hpp"

namespace trib {

Ball operator/(Ball a, Ball b) {
  double blo = std::fabs(b.mid) - b.rad;
  if (blo <= 0.0) throw Error("ball division by interval containing zero");
  double m = a.mid / b.mid;
  double r = (a.rad + std::fabs(m) * b.rad) / blo;
  return {m, r + ball_pad(m)};
}

Ball bsqrt(Ball a) {
  if (a.lo() < 0.0) throw Error("ball sqrt of possibly negative value");
  double slo = std::sqrt(a.lo());
  double shi = std::sqrt(a.hi());
  // one extra ulp each side for the sqrt evaluations themselves
  slo = std::nextafter(slo, 0.0);
  shi = std::nextafter(shi, HUGE_VAL);
  return Ball::interval(slo, shi);
}

Ball bcos(Ball a) {
  double lo = a.lo(), hi = a.hi();
  double c0 = std::cos(lo), c1 = std::cos(hi);
  double vmin = std::fmin(c0, c1), vmax = std::fmax(c0, c1);
  // interior critical points at integer multiples of pi
  const double pi = 3.14159265358979323846;
  double m0 = std::ceil(lo / pi - 1e-9);
  double m1 = std::floor(hi / pi + 1e-9);
  for (double m = m0; m <= m1; m += 1.0) {
    if (std::fmod(m, 2.0) == 0.0)
      vmax = 1.0;
    else
      vmin = -1.0;
  }
  vmin = std::fmax(vmin - 4e-16 * (1.0 + std::fabs(lo) + std::fabs(hi)), -1.0);
  vmax = std::fmin(vmax + 4e-16 * (1.0 + std::fabs(lo) + std::fabs(hi)), 1.0);
  return Ball::interval(vmin, vmax);
}

CBall operator/(CBall a, CBall b) {
  Ball d = b.re * b.re + b.im * b.im;
  CBall num = a * b.conj();
  return {num.re / d, num.im / d};
}

Ball batan2(Ball y, Ball x) {
  // stay away from the branch cut (negative real axis) and the origin
  if (x.hi() < 0.0 && y.contains(0.0))
    throw Error("ball atan2 interval crosses the branch cut");
  if (x.contains(0.0) && y.contains(0.0)) throw Error("ball atan2 interval contains the origin");
  double ax = std::fmax(std::fabs(x.mid) - x.rad, 0.0);
  double ay = std::fmax(std::fabs(y.mid) - y.rad, 0.0);
  double rlo = std::hypot(ax, ay);  // lower bound on distance to the origin
  double m = std::atan2(y.mid, x.mid);
  // |d atan2| <= (|dx| + |dy|) * sqrt(2) / r; use factor 2 for slack
  double r = 2.0 * (x.rad + y.rad) / rlo;
  return {m, r + ball_pad(m) + 4e-16};
}

}  // namespace trib
