#include "quintic/numtheory.hpp"

#include <numeric>

#include "quintic/error.hpp"

namespace quintic {

std::ostream &operator<<(std::ostream &os, const Valuation &v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

Valuation sigma2(std::int64_t n) {
  if (n == 0) return Valuation::infinity();
  if (n < 0) n = -n;
  int i = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++i;
  }
  return Valuation(i);
}

std::int64_t gcd0(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

std::int64_t lcm0(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a < 0 ? -a : a, b < 0 ? -b : b);
}

std::int64_t tau(std::int64_t n, std::int64_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidInput, "tau requires m >= 1");
  for (std::int64_t j = 1; j <= m; ++j) {
    if (m % j == 0 && gcd0(n, m / j) == 1) return j;
  }
  return m;  // unreachable: j == m always qualifies
}

}  // namespace quintic
