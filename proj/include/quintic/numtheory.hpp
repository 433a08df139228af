#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace quintic {

/// 2-adic valuation extended with a distinguished infinite value, which is
/// what the valuation of zero evaluates to.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(int value) : value_(value) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.value_ = kInfinite;
    return v;
  }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr int value() const { return value_; }
  constexpr bool nonzero() const { return value_ != 0; }

  constexpr auto operator<=>(const Valuation &) const = default;
  constexpr bool operator==(const Valuation &) const = default;
  constexpr auto operator<=>(int rhs) const { return value_ <=> rhs; }
  constexpr bool operator==(int rhs) const { return value_ == rhs; }

  /// Infinity absorbs finite offsets.
  constexpr Valuation operator+(int offset) const {
    return is_infinite() ? *this : Valuation(value_ + offset);
  }

 private:
  static constexpr int kInfinite = std::numeric_limits<int>::max();
  int value_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Valuation &v);

/// Largest i with 2^i dividing |n|; infinity for n == 0.
Valuation sigma2(std::int64_t n);

/// Smallest divisor j of m with gcd(n, m / j) == 1. Requires m >= 1.
std::int64_t tau(std::int64_t n, std::int64_t m);

/// 2 for even n, 1 for odd n.
constexpr std::int64_t alpha(std::int64_t n) { return n % 2 == 0 ? 2 : 1; }

/// gcd on absolute values; gcd0(0, m) == |m|.
std::int64_t gcd0(std::int64_t a, std::int64_t b);

/// lcm with lcm0(0, x) == lcm0(x, 0) == 0.
std::int64_t lcm0(std::int64_t a, std::int64_t b);

/// Canonical residue of x modulo m in [0, m).
constexpr std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace quintic
