#include "trib/params.hpp"

#include <charconv>
#include <stdexcept>

namespace trib {

RecurrenceParams::RecurrenceParams(std::int64_t a_, std::int64_t b_, std::int64_t c_)
    : a(a_), b(b_), c(c_) {
  if (a < 0 || b < 0) throw std::invalid_argument("recurrence coefficients a, b must be >= 0");
  if (c < 1) throw std::invalid_argument("recurrence coefficient c must be >= 1");
  if (a + b + c < 2) throw std::invalid_argument("a+b+c must be >= 2 (x_n = x_{n-3} excluded)");
}

std::string RecurrenceParams::str() const {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

RecurrenceParams parse_params(const std::string& text) {
  std::int64_t v[3];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    auto [next, ec] = std::from_chars(p, end, v[i]);
    if (ec != std::errc{}) throw std::invalid_argument("params must be \"a,b,c\": " + text);
    p = next;
    if (i < 2) {
      if (p == end || *p != ',') throw std::invalid_argument("params must be \"a,b,c\": " + text);
      ++p;
    }
  }
  if (p != end) throw std::invalid_argument("params must be \"a,b,c\": " + text);
  return RecurrenceParams(v[0], v[1], v[2]);
}

mpz_class discriminant(const RecurrenceParams& params) {
  const mpz_class a = params.a, b = params.b, c = params.c;
  return -18 * a * b * c - 4 * a * a * a * c + a * a * b * b + 4 * b * b * b - 27 * c * c;
}

}  // namespace trib
