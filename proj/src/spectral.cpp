#include "trib/spectral.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "trib/errors.hpp"
#include "trib/sequence.hpp"

namespace trib {

SpectralData cubic_roots(const RecurrenceParams& params) {
  SpectralData s;
  s.params = params;
  s.root = root_enclosure(params);  // throws MultipleRealRootsError when disc >= 0
  s.eta1 = Ball::with_rad(s.root->mid(), s.root->rad());

  // Vieta: sum of roots = a, product = c, so Re(eta2) = (a - eta1)/2 and
  // |eta2|^2 = c/eta1.
  Ball re2 = 0.5 * (Ball::point(static_cast<double>(params.a)) - s.eta1);
  Ball mod2 = Ball::point(static_cast<double>(params.c)) / s.eta1;
  Ball im2 = bsqrt(mod2 - re2 * re2);
  s.eta2 = {re2, im2};
  s.delta = s.eta2.arg();

  // mu_j = 1/eta_j are the roots of the reversed characteristic polynomial.
  // Lagrange solve of (sum_j E_j mu_j^t = [0, k, l] at t = 0,1,2) gives
  // E_j = (l - k*(mu_j' + mu_j'')) / D_j with D_j = prod over the other two
  // roots of (mu_j - mu), and the orbit coefficient is C_j = E_j * eta_j.
  Ball mu1 = Ball::point(1.0) / s.eta1;
  CBall mu2 = {re2 / mod2, -(im2 / mod2)};  // 1/eta2 = conj(eta2)/|eta2|^2
  // real direction: D1 = (mu1 - mu2)(mu1 - conj(mu2)) is real
  Ball d1 = (mu1 - mu2.re) * (mu1 - mu2.re) + mu2.im * mu2.im;
  s.zeta_r = s.eta1 / d1;
  s.psi_r = -2.0 * (mu2.re * s.zeta_r);
  // complex direction: D2 = (mu2 - mu1)(mu2 - conj(mu2))
  CBall d2 = (mu2 - CBall{mu1, Ball{}}) * CBall{Ball{}, 2.0 * mu2.im};
  s.zeta1 = s.eta2 / d2;
  s.psi1 = -1.0 * ((CBall{mu1, Ball{}} + mu2.conj()) * s.zeta1);
  return s;
}

std::pair<CBall, CBall> closed_form_constants(const SpectralData& spec, bool use_closed_form) {
  if (!use_closed_form) return {spec.psi1, spec.zeta1};
  if (!spec.params.is_tribonacci())
    throw std::invalid_argument("closed-form constants route requires tribonacci parameters");
  // psi1 = (eta2^3 + eta2^2)/(eta2^2 + 2 eta2 + 3), zeta1 = eta2^3/(same)
  CBall e = spec.eta2;
  CBall e2 = e * e;
  CBall e3 = e2 * e;
  CBall den = e2 + 2.0 * e + CBall::point(3.0, 0.0);
  return {(e3 + e2) / den, e3 / den};
}

AlphaBetaGamma alpha_beta_gamma(const SpectralData& spec, long k, long l) {
  AlphaBetaGamma r;
  r.k = k;
  r.l = l;
  if (k == 0 && l == 0) return r;  // everything zero, gamma fixed to 0
  double kd = static_cast<double>(k), ld = static_cast<double>(l);
  r.alpha = kd * spec.psi_r + ld * spec.zeta_r;
  CBall w = 2.0 * (kd * spec.psi1 + ld * spec.zeta1);
  r.beta = w.abs();
  r.gamma = w.arg();
  return r;
}

Ball closed_form_eval(const SpectralData& spec, long k, long l, long i, long n) {
  if (i > n) throw std::invalid_argument("closed_form_eval needs i <= n");
  if (spec.params.c != 1)
    throw std::invalid_argument("closed-form scaling by eta1^{1/2} requires c = 1");
  long j = n - i + 1;  // position counted from the zero terminus, >= 1
  AlphaBetaGamma abg = alpha_beta_gamma(spec, k, l);
  double lo, hi;
  spec.root->pow_half_interval(j, lo, hi);
  Ball half = Ball::interval(lo, hi);  // eta1^{j/2}
  spec.root->pow_half_interval(3 * j, lo, hi);
  Ball neg3 = Ball::point(1.0) / Ball::interval(lo, hi);  // eta1^{-3j/2}
  Ball cosarg = abg.gamma - static_cast<double>(j) * spec.delta;
  return (abg.alpha * neg3 + abg.beta * bcos(cosarg)) * half;
}

AmplitudeScanReport amplitude_scan(const SpectralData& spec, long grid_bound) {
  if (grid_bound < 1) throw std::invalid_argument("amplitude_scan needs grid_bound >= 1");
  AmplitudeScanReport rep;
  rep.grid_bound = grid_bound;
  rep.min_ratio = HUGE_VAL;
  rep.min_diag_ratio = HUGE_VAL;
  for (long k = -grid_bound; k <= grid_bound; ++k) {
    for (long l = -grid_bound; l <= grid_bound; ++l) {
      if (k == 0 && l == 0) continue;
      ++rep.checked;
      double s = static_cast<double>(std::labs(k) + std::labs(l));
      Ball alpha = static_cast<double>(k) * spec.psi_r + static_cast<double>(l) * spec.zeta_r;
      CBall w = 2.0 * (static_cast<double>(k) * spec.psi1 + static_cast<double>(l) * spec.zeta1);
      Ball beta = w.abs();
      bool ok = babs(alpha).hi() <= s && (31.0 * beta).lo() >= s;
      if (!ok) ++rep.violations;
      double ratio = beta.mid / s;
      if (ratio < rep.min_ratio) {
        rep.min_ratio = ratio;
        rep.argmin_k = k;
        rep.argmin_l = l;
      }
      if (k > 0 && 0 > l) {
        double dr = beta.mid / static_cast<double>(k - l);
        if (dr < rep.min_diag_ratio) {
          rep.min_diag_ratio = dr;
          rep.diag_k = k;
          rep.diag_l = l;
        }
      }
    }
  }
  return rep;
}

PairBoundReport pair_bound_grid_check(long kl_bound, long n_max) {
  if (kl_bound < 1 || n_max < 2)
    throw std::invalid_argument("pair_bound_grid_check needs kl_bound >= 1, n_max >= 2");
  RecurrenceParams trib;
  auto root = root_enclosure(trib);
  // |b| > eta1^{n/2}/100 for integer b is equivalent to |b| >= thr[n] with
  // thr[n] = floor(eta1^{n/2}/100) + 1 (the quotient is irrational).
  std::vector<mpz_class> thr(static_cast<std::size_t>(n_max) + 2);
  for (long n = 2; n <= n_max + 1; ++n)
    thr[static_cast<std::size_t>(n)] = root->floor_pow_half_div(n, 100) + 1;

  PairBoundReport rep;
  rep.kl_bound = kl_bound;
  rep.n_max = n_max;
  for (long k = -kl_bound; k <= kl_bound; ++k) {
    for (long l = -kl_bound; l <= kl_bound; ++l) {
      if (k == 0 && l == 0) continue;
      auto b = reverse_from_zero(trib, k, l, n_max + 1);  // b[0] = b_1 = 0
      for (long n = 2; n <= n_max; ++n) {
        ++rep.checked;
        bool ok = abs(b[static_cast<std::size_t>(n) - 1]) >= thr[static_cast<std::size_t>(n)] ||
                  abs(b[static_cast<std::size_t>(n)]) >= thr[static_cast<std::size_t>(n) + 1];
        if (!ok) ++rep.violations;
      }
    }
  }
  return rep;
}

}  // namespace trib
