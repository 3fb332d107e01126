#pragma once

// Certified spectral decomposition of the companion cubic x^3 - a x^2 - b x - c:
// the real root eta1, the complex pair eta2/conj(eta2), the rotation angle
// delta = arg(eta2), and the closed-form constants expressing the reversed
// orbit started (0, k, l) in eigencoordinates.  Everything is returned as
// balls that certifiably contain the true values.

#include <memory>
#include <utility>

#include "trib/ball.hpp"
#include "trib/dyadic.hpp"
#include "trib/params.hpp"

namespace trib {

struct SpectralData {
  RecurrenceParams params;
  Ball eta1;   // real root, > 1 for every accepted parameter set
  CBall eta2;  // complex root, imaginary part > 0
  Ball delta;  // arg(eta2), in (0, pi)

  // Per-unit closed-form coefficients: the reversed orbit (0, k, l) has
  //   b_i = (k*psi_r + l*zeta_r) * eta1^{-i} + 2*Re((k*psi1 + l*zeta1) * eta2^{-i}).
  CBall psi1, zeta1;   // complex-eigendirection coefficients
  Ball psi_r, zeta_r;  // real-eigendirection coefficients

  std::shared_ptr<const RootEnclosure> root;  // exact backing for eta1 powers

  CBall psi2() const { return psi1.conj(); }
  CBall zeta2() const { return zeta1.conj(); }
};

// Throws MultipleRealRootsError when the discriminant is >= 0.
SpectralData cubic_roots(const RecurrenceParams& params);

// The (psi1, zeta1) pair.  With use_closed_form set (tribonacci only) they are
// recomputed from the explicit rational expressions in eta2 instead of the
// general Lagrange solve; the two routes must agree and tests compare them.
std::pair<CBall, CBall> closed_form_constants(const SpectralData& spec, bool use_closed_form);

struct AlphaBetaGamma {
  long k = 0, l = 0;
  Ball alpha;  // real-direction coefficient, k*psi_r + l*zeta_r
  Ball beta;   // oscillation amplitude, |2(k*psi1 + l*zeta1)|
  Ball gamma;  // phase in (-pi, pi]; fixed to 0 when (k,l) = (0,0)
};
AlphaBetaGamma alpha_beta_gamma(const SpectralData& spec, long k, long l);

// Closed-form value of the term at forward index i in the length-n orbit
// ending (..., l, k, 0); the ball contains the exact integer that
// extend_backward produces at that position.  Requires c = 1 and i <= n.
Ball closed_form_eval(const SpectralData& spec, long k, long l, long i, long n);

// Grid check of the amplitude bounds: |alpha| <= |k|+|l| and
// beta >= (|k|+|l|)/31 for all 0 < max(|k|,|l|) <= grid_bound, plus the
// observed minima of beta/(|k|+|l|) (whole grid) and beta/(k-l) (k > 0 > l).
struct AmplitudeScanReport {
  long grid_bound = 0;
  long checked = 0;
  long violations = 0;
  double min_ratio = 0.0;  // min beta/(|k|+|l|)
  long argmin_k = 0, argmin_l = 0;
  double min_diag_ratio = 0.0;  // min beta/(k-l) over k > 0 > l
  long diag_k = 0, diag_l = 0;
};
AmplitudeScanReport amplitude_scan(const SpectralData& spec, long grid_bound);

// Exact-arithmetic sweep of the consecutive-pair lower bound: for every
// (k,l) != (0,0) with |k|,|l| <= kl_bound and every 2 <= n <= n_max, the
// reversed orbit (0, k, l) has |b_n| > 0.01*eta1^{n/2} or
// |b_{n+1}| > 0.01*eta1^{(n+1)/2}.  Tribonacci parameters only.
struct PairBoundReport {
  long kl_bound = 0, n_max = 0;
  unsigned long long checked = 0;
  long violations = 0;
};
PairBoundReport pair_bound_grid_check(long kl_bound, long n_max);

}  // namespace trib
