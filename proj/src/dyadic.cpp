#include "trib/dyadic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "trib/errors.hpp"

namespace trib {

namespace {
constexpr int kMaxBits = 8192;  // refinement cap; hit only on a logic error

// Sign of P(m / 2^s) scaled by 2^(3s):  m^3 - a m^2 2^s - b m 4^s - c 8^s.
int sign_p(const RecurrenceParams& params, const mpz_class& m, int s) {
  mpz_class t = m * m * m;
  mpz_class pw = mpz_class(1) << s;
  t -= params.a * m * m * pw;
  pw <<= s;
  t -= params.b * m * pw;
  pw <<= s;
  t -= params.c * pw;
  return sgn(t);
}
}  // namespace

struct RootEnclosure::Impl {
  mutable std::mutex mu;
  mutable mpz_class mant;   // enclosure [mant, mant+1] / 2^bits
  mutable int bits = 0;
  mutable bool exact = false;

  // Must be called with mu held.
  void refine_to(const RecurrenceParams& params, int target) const {
    if (exact) return;
    if (target > kMaxBits) throw Error("root refinement beyond cap; comparison likely degenerate");
    while (bits < target) {
      mpz_class m2 = 2 * mant + 1;
      int s = sign_p(params, m2, bits + 1);
      if (s == 0) {
        mant = m2;
        ++bits;
        exact = true;
        return;
      }
      mant = (s < 0) ? m2 : 2 * mant;
      ++bits;
    }
  }

  mpq_class make_q(const mpz_class& num, int b) const {
    mpq_class q(num, mpz_class(1) << b);
    q.canonicalize();
    return q;
  }

  // Must be called with mu held: exact rational bounds of eta1^e.
  void pow_bounds_locked(long e, mpq_class& lo, mpq_class& hi) const {
    if (e < 0) throw std::invalid_argument("pow_bounds needs e >= 0");
    mpz_class nlo, nhi, den;
    mpz_pow_ui(nlo.get_mpz_t(), mant.get_mpz_t(), static_cast<unsigned long>(e));
    if (exact) {
      nhi = nlo;
    } else {
      mpz_class m1 = mant + 1;
      mpz_pow_ui(nhi.get_mpz_t(), m1.get_mpz_t(), static_cast<unsigned long>(e));
    }
    den = mpz_class(1) << static_cast<unsigned long>(bits * e);
    lo = mpq_class(nlo, den);
    lo.canonicalize();
    hi = mpq_class(nhi, den);
    hi.canonicalize();
  }

  // Must be called with mu held: bounds of eta1^(j/2); `scale` controls the
  // extra integer-sqrt precision used for odd j.
  void half_pow_bounds_locked(long j, int scale, mpq_class& lo, mpq_class& hi) const {
    if (j % 2 == 0) {
      pow_bounds_locked(j / 2, lo, hi);
      return;
    }
    mpq_class plo, phi;
    pow_bounds_locked(j, plo, phi);
    // sqrt(n/d) in [isqrt(n*d*4^s), isqrt(n*d*4^s)+1] / (d*2^s)
    mpz_class s2 = mpz_class(1) << static_cast<unsigned long>(2 * scale);
    mpz_class t = plo.get_num() * plo.get_den() * s2, r;
    mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
    lo = mpq_class(r, plo.get_den() << static_cast<unsigned long>(scale));
    lo.canonicalize();
    t = phi.get_num() * phi.get_den() * s2;
    mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
    hi = mpq_class(r + 1, phi.get_den() << static_cast<unsigned long>(scale));
    hi.canonicalize();
  }
};

RootEnclosure::RootEnclosure(const RecurrenceParams& params, int bits)
    : params_(params), impl_(new Impl) {
  if (discriminant(params) >= 0)
    throw MultipleRealRootsError("params " + params.str() +
                                 ": discriminant >= 0, no unique real root to enclose");
  // Integer bracket [lo, lo+1] with P(lo) < 0 < P(lo+1); P(1) = 1-a-b-c < 0.
  mpz_class lo = 1, hi = params.a + params.b + params.c + 1;
  bool exact_hit = false;
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    int s = sign_p(params_, mid, 0);
    if (s == 0) {
      lo = mid;
      exact_hit = true;
      break;
    }
    (s < 0 ? lo : hi) = mid;
  }
  impl_->mant = lo;
  impl_->bits = 0;
  impl_->exact = exact_hit;
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->refine_to(params_, bits);
}

RootEnclosure::~RootEnclosure() = default;

bool RootEnclosure::exact() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->exact;
}

mpq_class RootEnclosure::lower() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->make_q(impl_->mant, impl_->bits);
}

mpq_class RootEnclosure::upper() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->make_q(impl_->exact ? impl_->mant : impl_->mant + 1, impl_->bits);
}

double RootEnclosure::mid() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  double lo = mpq_class(impl_->make_q(impl_->mant, impl_->bits)).get_d();
  return impl_->exact ? lo : lo + std::ldexp(0.5, -impl_->bits);
}

double RootEnclosure::rad() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (impl_->exact) return 0.0;
  // width 2^-bits plus conversion slack
  return std::ldexp(1.0, -std::min(impl_->bits, 1000)) + 1e-15;
}

void RootEnclosure::pow_bounds(long e, mpq_class& lo, mpq_class& hi) const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->pow_bounds_locked(e, lo, hi);
}

int RootEnclosure::cmp_pow_half(const mpq_class& x, long j) const {
  if (j < 0) throw std::invalid_argument("cmp_pow_half needs j >= 0");
  if (sgn(x) < 0) return -1;  // eta1^(j/2) > 0
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (j % 2 == 0) {
    long e = j / 2;
    for (int round = 0;; ++round) {
      mpq_class lo, hi;
      impl_->pow_bounds_locked(e, lo, hi);
      if (x < lo) return -1;
      if (x > hi) return 1;
      if (lo == hi) return cmp(x, lo);  // exact root
      impl_->refine_to(params_, impl_->bits + 32);
    }
  }
  // odd j, x >= 0: compare x^2 against eta1^j (exact squaring)
  mpq_class x2 = x * x;
  for (int round = 0;; ++round) {
    mpq_class lo, hi;
    impl_->pow_bounds_locked(j, lo, hi);
    if (x2 < lo) return -1;
    if (x2 > hi) return 1;
    if (lo == hi) return cmp(x2, lo);  // x^2 = eta1^j with eta1 rational: sides equal only if truly equal
    impl_->refine_to(params_, impl_->bits + 32);
  }
}

mpz_class RootEnclosure::ceil_div_pow_half(const mpz_class& num, long j) const {
  if (j < 0 || sgn(num) < 0) throw std::invalid_argument("ceil_div_pow_half needs num, j >= 0");
  if (num == 0) return 0;
  std::lock_guard<std::mutex> lock(impl_->mu);
  int scale = 64;
  for (int round = 0;; ++round) {
    mpq_class lo, hi;
    impl_->half_pow_bounds_locked(j, scale, lo, hi);
    // ceil(num / hi) <= true <= ceil(num / lo)
    mpz_class cl, ch;
    mpz_cdiv_q(cl.get_mpz_t(), mpz_class(num * hi.get_den()).get_mpz_t(), hi.get_num().get_mpz_t());
    mpz_cdiv_q(ch.get_mpz_t(), mpz_class(num * lo.get_den()).get_mpz_t(), lo.get_num().get_mpz_t());
    if (cl == ch) return cl;
    if (round > 200) throw Error("ceil_div_pow_half failed to converge");
    impl_->refine_to(params_, impl_->bits + 32);
    scale += 32;
  }
}

mpz_class RootEnclosure::floor_pow_half_div(long j, const mpz_class& den) const {
  if (j < 0 || den < 1) throw std::invalid_argument("floor_pow_half_div needs j >= 0, den >= 1");
  std::lock_guard<std::mutex> lock(impl_->mu);
  int scale = 64;
  for (int round = 0;; ++round) {
    mpq_class lo, hi;
    impl_->half_pow_bounds_locked(j, scale, lo, hi);
    mpz_class fl, fh;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(),
               mpz_class(lo.get_den() * den).get_mpz_t());
    mpz_fdiv_q(fh.get_mpz_t(), hi.get_num().get_mpz_t(),
               mpz_class(hi.get_den() * den).get_mpz_t());
    if (fl == fh) return fl;
    if (round > 200) throw Error("floor_pow_half_div failed to converge");
    impl_->refine_to(params_, impl_->bits + 32);
    scale += 32;
  }
}

void RootEnclosure::pow_half_interval(long j, double& lo_d, double& hi_d) const {
  if (j < 0) throw std::invalid_argument("pow_half_interval needs j >= 0");
  std::lock_guard<std::mutex> lock(impl_->mu);
  mpq_class lo, hi;
  impl_->half_pow_bounds_locked(j, 64, lo, hi);
  // mpq_get_d truncates toward zero; pad outward to stay conservative.
  lo_d = std::nextafter(lo.get_d(), 0.0);
  hi_d = std::nextafter(std::nextafter(hi.get_d(), HUGE_VAL), HUGE_VAL);
}

std::shared_ptr<const RootEnclosure> root_enclosure(const RecurrenceParams& params) {
  static std::mutex reg_mutex;
  static std::map<RecurrenceParams, std::shared_ptr<const RootEnclosure>> registry;
  std::lock_guard<std::mutex> lock(reg_mutex);
  auto& entry = registry[params];
  if (!entry) entry = std::make_shared<const RootEnclosure>(params);
  return entry;
}

}  // namespace trib
