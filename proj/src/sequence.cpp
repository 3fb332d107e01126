#include "trib/sequence.hpp"

#include <stdexcept>
#include <utility>

#include "trib/errors.hpp"

namespace trib {

IntSequence::IntSequence(RecurrenceParams params, std::vector<mpz_class> terms)
    : params_(params), terms_(std::move(terms)) {
  if (terms_.size() < 3) throw std::invalid_argument("IntSequence needs at least 3 terms");
  mpz_class expect;
  for (std::size_t i = 3; i < terms_.size(); ++i) {
    expect = params_.a * terms_[i - 1] + params_.b * terms_[i - 2] + params_.c * terms_[i - 3];
    if (expect != terms_[i])
      throw std::invalid_argument("terms do not satisfy the recurrence at index " +
                                  std::to_string(i + 1));
  }
}

const mpz_class& IntSequence::term(long i) const {
  if (i < 1 || i > length()) throw std::out_of_range("sequence index " + std::to_string(i));
  return terms_[static_cast<std::size_t>(i - 1)];
}

IntSequence extend_forward(const RecurrenceParams& params, const Seed& seed, long length) {
  if (length < 3) throw std::invalid_argument("extend_forward needs length >= 3");
  std::vector<mpz_class> t;
  t.reserve(static_cast<std::size_t>(length));
  t.push_back(seed[0]);
  t.push_back(seed[1]);
  t.push_back(seed[2]);
  for (long i = 3; i < length; ++i)
    t.push_back(params.a * t[i - 1] + params.b * t[i - 2] + params.c * t[i - 3]);
  return IntSequence(params, std::move(t));
}

IntSequence extend_backward(const RecurrenceParams& params, const Seed& tail, long steps) {
  if (steps < 0) throw std::invalid_argument("extend_backward needs steps >= 0");
  // Build back-to-front, then reverse once.
  std::vector<mpz_class> rev{tail[2], tail[1], tail[0]};
  rev.reserve(static_cast<std::size_t>(steps) + 3);
  mpz_class num, prev;
  for (long s = 0; s < steps; ++s) {
    // window (x_{i+1}, x_{i+2}, x_{i+3}) is the last three prepended terms
    const mpz_class& x1 = rev[rev.size() - 1];
    const mpz_class& x2 = rev[rev.size() - 2];
    const mpz_class& x3 = rev[rev.size() - 3];
    num = x3 - params.a * x2 - params.b * x1;
    if (params.c != 1) {
      if (num % params.c != 0)
        throw DivisibilityError("no integer pre-image: " + num.get_str() +
                                " not divisible by c=" + std::to_string(params.c));
      prev = num / params.c;
    } else {
      prev = num;
    }
    rev.push_back(prev);
  }
  std::vector<mpz_class> fwd(rev.rbegin(), rev.rend());
  return IntSequence(params, std::move(fwd));
}

std::vector<mpz_class> reverse_from_zero(const RecurrenceParams& params, const mpz_class& k,
                                         const mpz_class& l, long count) {
  if (count < 0) throw std::invalid_argument("reverse_from_zero needs count >= 0");
  std::vector<mpz_class> b{0, k, l};
  b.reserve(static_cast<std::size_t>(count));
  mpz_class num;
  while (static_cast<long>(b.size()) < count) {
    std::size_t i = b.size();
    num = b[i - 3] - params.a * b[i - 2] - params.b * b[i - 1];
    if (params.c != 1) {
      if (num % params.c != 0)
        throw DivisibilityError("no integer continuation: " + num.get_str() +
                                " not divisible by c=" + std::to_string(params.c));
      num /= params.c;
    }
    b.push_back(num);
  }
  b.resize(static_cast<std::size_t>(count));
  return b;
}

}  // namespace trib
