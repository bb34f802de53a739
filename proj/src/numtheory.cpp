#include "pgc/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pgc {

namespace {

void check_argument(i64 n, const char* who) {
  if (n < 1)
    throw std::invalid_argument(std::string(who) + ": argument must be >= 1, got " +
                                std::to_string(n));
  if (n > kMaxArgument)
    throw std::invalid_argument(std::string(who) + ": argument exceeds supported range (2^32)");
}

}  // namespace

i64 ipow(i64 base, int exp) {
  i64 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

i64 Factorization::recompose() const {
  i64 r = 1;
  for (const auto& pp : parts) r *= ipow(pp.prime, pp.exponent);
  return r;
}

Factorization factorize(i64 n) {
  check_argument(n, "factorize");
  Factorization f;
  f.n = n;
  i64 rest = n;
  for (i64 p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.parts.push_back({p, e});
  }
  if (rest > 1) f.parts.push_back({rest, 1});
  return f;
}

i64 euler_phi(i64 n) {
  check_argument(n, "euler_phi");
  i64 phi = n;
  for (const auto& pp : factorize(n).parts) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

std::vector<i64> divisors(i64 n) {
  check_argument(n, "divisors");
  std::vector<i64> divs{1};
  for (const auto& pp : factorize(n).parts) {
    const std::size_t base = divs.size();
    i64 q = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      q *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * q);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

i64 phi_divisor_sum(i64 n, i64 m) {
  check_argument(n, "phi_divisor_sum");
  if (m < 1 || n % m != 0)
    throw std::invalid_argument("phi_divisor_sum: m = " + std::to_string(m) +
                                " does not divide n = " + std::to_string(n));
  i64 sum = 0;
  for (i64 d : divisors(m)) sum += euler_phi(n / d);
  return sum;
}

}  // namespace pgc
