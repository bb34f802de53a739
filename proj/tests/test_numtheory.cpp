#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pgc/numtheory.hpp"

using namespace pgc;

TEST_CASE("factorize on known inputs") {
  CHECK(factorize(1).parts.empty());
  CHECK(factorize(12).parts == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(360).parts == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(97).is_prime_power());
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
  CHECK_THROWS_AS(factorize(-4), std::invalid_argument);
  CHECK_THROWS_AS(factorize(kMaxArgument + 1), std::invalid_argument);
}

TEST_CASE("factorize round-trips and yields primes in ascending order") {
  for (i64 n = 1; n <= 100'000; ++n) {
    const auto f = factorize(n);
    REQUIRE(f.recompose() == n);
    for (std::size_t i = 0; i < f.parts.size(); ++i) {
      REQUIRE(f.parts[i].exponent >= 1);
      if (i) REQUIRE(f.parts[i - 1].prime < f.parts[i].prime);
    }
  }
  for (i64 n = 2; n <= 3000; ++n)
    for (const auto& pp : factorize(n).parts) REQUIRE(oracles::is_prime_by_division(pp.prime));
}

TEST_CASE("euler_phi matches the coprime count") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(20) == 8);
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
  for (i64 n = 1; n <= 500; ++n) REQUIRE(euler_phi(n) == oracles::totient_by_count(n));
}

TEST_CASE("euler_phi is multiplicative on coprime pairs") {
  std::mt19937_64 rng(20240614);
  int tested = 0;
  while (tested < 500) {
    const i64 a = 1 + static_cast<i64>(rng() % 10'000);
    const i64 b = 1 + static_cast<i64>(rng() % 10'000);
    if (std::gcd(a, b) != 1) continue;
    ++tested;
    REQUIRE(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
  }
}

TEST_CASE("totient sum over divisors recovers n") {
  for (i64 n = 1; n <= 10'000; ++n) {
    i64 sum = 0;
    for (i64 d : divisors(n)) sum += euler_phi(d);
    REQUIRE(sum == n);
  }
}

TEST_CASE("divisors are exactly the ascending divisor list") {
  CHECK(divisors(1) == std::vector<i64>{1});
  CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(20) == std::vector<i64>{1, 2, 4, 5, 10, 20});
  CHECK_THROWS_AS(divisors(0), std::invalid_argument);
  for (i64 n = 1; n <= 2000; ++n) REQUIRE(divisors(n) == oracles::divisors_by_scan(n));
}

TEST_CASE("phi_divisor_sum") {
  CHECK(phi_divisor_sum(12, 1) == 4);
  CHECK(phi_divisor_sum(12, 6) == 9);
  CHECK(phi_divisor_sum(20, 10) == 15);
  CHECK_THROWS_AS(phi_divisor_sum(12, 5), std::invalid_argument);
  CHECK_THROWS_AS(phi_divisor_sum(12, 0), std::invalid_argument);
  for (i64 n = 1; n <= 10'000; ++n) REQUIRE(phi_divisor_sum(n, n) == n);
}
