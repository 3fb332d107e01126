#pragma once

// Small self-validating interval ("ball") arithmetic on doubles: every
// operation inflates the radius enough to cover double rounding, so a Ball is
// always a superset of the true real value it tracks.  Used for the spectral
// constants, where claims carry explicit tolerances (5e-4 and coarser) and the
// radii stay near 1e-13.

#include <cmath>

namespace trib {

// 4 ulps of slack per operation plus a subnormal floor.
inline double ball_pad(double mid) noexcept {
  return 4.0 * 2.220446049250313e-16 * std::fabs(mid) + 1e-300;
}

struct Ball {
  double mid = 0.0;
  double rad = 0.0;

  static Ball point(double x) noexcept { return {x, ball_pad(x)}; }
  static Ball with_rad(double mid, double rad) noexcept { return {mid, rad + ball_pad(mid)}; }
  static Ball interval(double lo, double hi) noexcept {
    double m = 0.5 * (lo + hi);
    return {m, 0.5 * (hi - lo) + ball_pad(m)};
  }

  double lo() const noexcept { return mid - rad; }
  double hi() const noexcept { return mid + rad; }
  bool contains(double x) const noexcept { return lo() <= x && x <= hi(); }
  bool certainly_lt(double x) const noexcept { return hi() < x; }
  bool certainly_gt(double x) const noexcept { return lo() > x; }
  bool certainly_nonzero() const noexcept { return lo() > 0.0 || hi() < 0.0; }
  // Entire ball within tol of target.
  bool within(double target, double tol) const noexcept {
    return std::fabs(mid - target) + rad <= tol;
  }
};

inline Ball operator-(Ball a) noexcept { return {-a.mid, a.rad}; }

inline Ball operator+(Ball a, Ball b) noexcept {
  double m = a.mid + b.mid;
  return {m, a.rad + b.rad + ball_pad(m)};
}

inline Ball operator-(Ball a, Ball b) noexcept { return a + (-b); }

inline Ball operator*(Ball a, Ball b) noexcept {
  double m = a.mid * b.mid;
  return {m, std::fabs(a.mid) * b.rad + std::fabs(b.mid) * a.rad + a.rad * b.rad + ball_pad(m)};
}

inline Ball operator*(double s, Ball a) noexcept { return Ball::point(s) * a; }

Ball operator/(Ball a, Ball b);  // throws Error when b may contain zero

inline Ball babs(Ball a) noexcept {
  if (a.lo() >= 0.0) return a;
  if (a.hi() <= 0.0) return -a;
  double h = std::fmax(-a.lo(), a.hi());
  return Ball::interval(0.0, h);
}

Ball bsqrt(Ball a);              // throws Error when a may be negative
Ball bcos(Ball a);               // range-exact over the interval, incl. interior extrema
Ball batan2(Ball y, Ball x);     // throws Error near the branch cut or origin

inline Ball ball_pi() noexcept { return Ball::point(3.14159265358979323846); }
inline Ball ball_two_pi() noexcept { return Ball::point(6.28318530717958647692); }

struct CBall {
  Ball re, im;

  static CBall point(double r, double i) noexcept { return {Ball::point(r), Ball::point(i)}; }
  CBall conj() const noexcept { return {re, -im}; }
  Ball abs() const { return bsqrt(re * re + im * im); }
  Ball arg() const { return batan2(im, re); }
};

inline CBall operator+(CBall a, CBall b) noexcept { return {a.re + b.re, a.im + b.im}; }
inline CBall operator-(CBall a, CBall b) noexcept { return {a.re - b.re, a.im - b.im}; }
inline CBall operator*(CBall a, CBall b) noexcept {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CBall operator*(Ball s, CBall a) noexcept { return {s * a.re, s * a.im}; }
inline CBall operator*(double s, CBall a) noexcept { return Ball::point(s) * a; }
CBall operator/(CBall a, CBall b);  // throws Error when |b| may be zero

}  // namespace trib
