#pragma once

#include <cstdint>
#include <vector>

namespace pgc {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Largest accepted argument. Keeps every product of totients of divisors
// comfortably inside 64 bits.
inline constexpr i64 kMaxArgument = i64(1) << 32;

struct PrimePower {
  i64 prime = 0;
  int exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with strictly increasing primes. Empty for n == 1.
struct Factorization {
  i64 n = 1;
  std::vector<PrimePower> parts;

  int prime_count() const { return static_cast<int>(parts.size()); }  // r
  bool is_prime_power() const { return parts.size() == 1; }
  i64 recompose() const;
};

i64 ipow(i64 base, int exp);

Factorization factorize(i64 n);           // n >= 1
i64 euler_phi(i64 n);                     // n >= 1
std::vector<i64> divisors(i64 n);         // ascending, n >= 1
i64 phi_divisor_sum(i64 n, i64 m);        // sum of phi(n/d) over d | m; requires m | n

}  // namespace pgc
