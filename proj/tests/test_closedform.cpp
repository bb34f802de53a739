#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pgc/closedform.hpp"

using namespace pgc;

namespace {

std::vector<int> union_of_classes(i64 n, std::initializer_list<i64> orders) {
  std::set<int> out;
  for (i64 d : orders)
    for (int x : order_class(GroupSpec::cyclic(n), d).members) out.insert(x);
  return {out.begin(), out.end()};
}

i64 brute_class_nbhd(i64 n, i64 d) {
  const auto g = build(GroupSpec::cyclic(n));
  const auto members = order_class(GroupSpec::cyclic(n), d).members;
  std::set<int> nb;
  for (int v : members)
    for (int w : g.neighbors(v)) nb.insert(w);
  for (int v : members) nb.erase(v);
  return static_cast<i64>(nb.size());
}

}  // namespace

TEST_CASE("degree formula") {
  CHECK(degree_cyclic(12, 12) == 11);
  CHECK(degree_cyclic(12, 2) == 9);
  CHECK(degree_cyclic(12, 4) == 7);
  CHECK_THROWS_AS(degree_cyclic(12, 5), std::invalid_argument);
  for (i64 n = 1; n <= 120; ++n) {
    const auto g = build(GroupSpec::cyclic(n));
    for (i64 d : divisors(n)) {
      const int x = order_class(GroupSpec::cyclic(n), d).members.front();
      REQUIRE(degree_cyclic(n, d) == g.degree(x));
    }
  }
}

TEST_CASE("class neighborhood size") {
  CHECK(class_neighborhood_size(12, 12) == 8);
  CHECK(class_neighborhood_size(12, 2) == 9);
  CHECK(class_neighborhood_size(12, 4) == 6);
  for (i64 n : {12, 20, 30, 45, 72}) {
    for (i64 d : divisors(n)) REQUIRE(class_neighborhood_size(n, d) == brute_class_nbhd(n, d));
  }
}

TEST_CASE("prime power specialization") {
  CHECK(class_neighborhood_size_prime_power(12, 1, 2) == 6);
  CHECK(class_neighborhood_size_prime_power(12, 2, 1) == 7);
  CHECK(class_neighborhood_size_prime_power(20, 2, 1) == 13);
  CHECK_THROWS_AS(class_neighborhood_size_prime_power(12, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(class_neighborhood_size_prime_power(12, 3, 1), std::invalid_argument);
  for (i64 n = 2; n <= 300; ++n) {
    const auto f = factorize(n);
    for (int k = 1; k <= f.prime_count(); ++k)
      for (int b = 1; b <= f.parts[k - 1].exponent; ++b)
        REQUIRE(class_neighborhood_size_prime_power(n, k, b) ==
                class_neighborhood_size(n, ipow(f.parts[k - 1].prime, b)));
  }
}

TEST_CASE("degree identity links the two neighborhood counts") {
  for (i64 n = 1; n <= 300; ++n)
    for (i64 d : divisors(n))
      REQUIRE(degree_cyclic(n, d) == class_neighborhood_size(n, d) + euler_phi(d) - 1);
}

TEST_CASE("neighborhood gap") {
  CHECK(neighborhood_gap(12, 1, 1, 2) == 3);
  CHECK(neighborhood_gap(72, 1, 1, 3) == 27);
  CHECK(neighborhood_gap(72, 2, 1, 2) == 18);
  CHECK_THROWS_AS(neighborhood_gap(72, 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(neighborhood_gap(8, 1, 1, 2), std::invalid_argument);  // needs two primes
  for (i64 n = 6; n <= 300; ++n) {
    const auto f = factorize(n);
    if (f.prime_count() < 2) continue;
    for (int k = 1; k <= f.prime_count(); ++k)
      for (int b = 1; b <= f.parts[k - 1].exponent; ++b)
        for (int g2 = b + 1; g2 <= f.parts[k - 1].exponent; ++g2) {
          const i64 gap = neighborhood_gap(n, k, b, g2);
          REQUIRE(gap > 0);
          REQUIRE(gap == class_neighborhood_size(n, ipow(f.parts[k - 1].prime, b)) -
                             class_neighborhood_size(n, ipow(f.parts[k - 1].prime, g2)));
        }
  }
}

TEST_CASE("Y_k cutsets") {
  CHECK(yk_cutset(12, 2) == std::vector<int>{0, 1, 5, 6, 7, 11});
  CHECK(yk_cutset(12, 1) == yk_cutset(12, 2));
  CHECK(yk_size(12, 2) == 6);
  CHECK(yk_size(30, 3) == 12);
  CHECK(yk_cutset(30, 3).size() == 12);
  CHECK_THROWS_AS(yk_cutset(8, 1), std::invalid_argument);
  CHECK_THROWS_AS(yk_size(7, 1), std::invalid_argument);
  for (i64 n = 6; n <= 300; ++n) {
    const auto f = factorize(n);
    if (f.prime_count() < 2) continue;
    for (int k = 1; k <= f.prime_count(); ++k)
      REQUIRE(static_cast<i64>(yk_cutset(n, k).size()) == yk_size(n, k));
  }
}

TEST_CASE("alpha bound") {
  CHECK(alpha_bound(12) == 6);
  CHECK(alpha_bound(30) == 12);
  CHECK(alpha_bound(60) == 24);
  CHECK_THROWS_AS(alpha_bound(9), std::invalid_argument);
  for (i64 n = 6; n <= 5000; ++n) {
    const auto f = factorize(n);
    if (f.prime_count() < 2) continue;
    REQUIRE(alpha_bound(n) == yk_size(n, f.prime_count()));
    REQUIRE(kappa_closed_cyclic(n).value <= alpha_bound(n));
  }
}

TEST_CASE("closed-form kappa") {
  CHECK(kappa_closed_cyclic(12).kind == KappaKind::Exact);
  CHECK(kappa_closed_cyclic(12).value == 6);
  CHECK(kappa_closed_cyclic(9).kind == KappaKind::Exact);
  CHECK(kappa_closed_cyclic(9).value == 8);
  CHECK(kappa_closed_cyclic(1).value == 0);
  CHECK(kappa_closed_cyclic(30).kind == KappaKind::UpperBoundOnly);
  CHECK(kappa_closed_cyclic(30).value == 12);
}

TEST_CASE("cyclic separability verdicts") {
  CHECK_FALSE(separable_cyclic(1).separable);
  CHECK(separable_cyclic(1).reason == VerdictReason::PrimeCount);
  CHECK_FALSE(separable_cyclic(6).separable);
  CHECK(separable_cyclic(6).reason == VerdictReason::SmallestSemiprime);
  CHECK_FALSE(separable_cyclic(12).separable);
  CHECK(separable_cyclic(12).reason == VerdictReason::TwelveExclusion);
  CHECK_FALSE(separable_cyclic(15).separable);  // 3 * 5

  CHECK(separable_cyclic(20).separable);
  CHECK(separable_cyclic(20).recipe == WitnessRecipe::A1Two_A2One);
  CHECK(separable_cyclic(30).recipe == WitnessRecipe::ThreePrimes);
  CHECK(separable_cyclic(35).recipe == WitnessRecipe::P1AtLeastFive);
  CHECK(separable_cyclic(24).recipe == WitnessRecipe::A1AtLeastThree_A2One);
  CHECK(separable_cyclic(18).recipe == WitnessRecipe::A2AtLeastTwo);
  CHECK(separable_cyclic(45).recipe == WitnessRecipe::A1Two_A2One);  // 45 = 3^2 * 5
  CHECK(separable_cyclic(50).recipe == WitnessRecipe::A2AtLeastTwo);
}

TEST_CASE("dihedral and dicyclic separability") {
  CHECK_THROWS_AS(separable_dihedral(2), std::invalid_argument);
  CHECK_FALSE(separable_dihedral(6).separable);
  CHECK(separable_dihedral(20).separable);
  CHECK_FALSE(separable_dihedral(12).separable);

  CHECK_THROWS_AS(separable_dicyclic(1), std::invalid_argument);
  CHECK_FALSE(separable_dicyclic(6).separable);
  CHECK(separable_dicyclic(6).reason == VerdictReason::SixExclusion);
  CHECK_FALSE(separable_dicyclic(4).separable);
  CHECK(separable_dicyclic(4).reason == VerdictReason::PowerOfTwo);
  CHECK_FALSE(separable_dicyclic(7).separable);
  CHECK(separable_dicyclic(7).reason == VerdictReason::PrimeParameter);
  CHECK(separable_dicyclic(12).separable);

  // the dicyclic clauses restate the C_2n clauses
  for (i64 n = 2; n <= 400; ++n)
    REQUIRE(separable_dicyclic(n).separable == separable_cyclic(2 * n).separable);
}

TEST_CASE("constructed cyclic cutset witnesses") {
  // survivors H_6 minus identity plus O_5
  const auto w30 = witness_cyclic_cutset_cyclic(30);
  std::set<int> survivors30;
  for (int x : order_class(GroupSpec::cyclic(30), 6).subgroup)
    if (x != 0) survivors30.insert(x);
  for (int x : order_class(GroupSpec::cyclic(30), 5).members) survivors30.insert(x);
  std::vector<int> expect30;
  for (int x = 0; x < 30; ++x)
    if (!survivors30.count(x)) expect30.push_back(x);
  CHECK(w30 == expect30);

  CHECK(witness_cyclic_cutset_cyclic(20) == union_of_classes(20, {1, 20, 10}));

  const auto w24 = witness_cyclic_cutset_cyclic(24);
  CHECK(w24 == union_of_classes(24, {1, 2, 4, 12, 24}));  // complement of O_8, O_6, O_3

  CHECK_THROWS_AS(witness_cyclic_cutset_cyclic(12), std::invalid_argument);

  // verdict-witness coherence, with every witness containing O_1 and O_n
  for (i64 n = 2; n <= 100; ++n) {
    if (!separable_cyclic(n).separable) continue;
    const auto w = witness_cyclic_cutset_cyclic(n);
    REQUIRE(is_cyclic_cutset(build(GroupSpec::cyclic(n)), w));
    REQUIRE(std::binary_search(w.begin(), w.end(), 0));
    for (int g : order_class(GroupSpec::cyclic(n), n).members)
      REQUIRE(std::binary_search(w.begin(), w.end(), g));
  }
}

TEST_CASE("closed-form ckappa") {
  CHECK(ckappa_closed_cyclic(12).kind == CkappaAnswer::Kind::Infinite);
  CHECK(ckappa_closed_cyclic(20).kind == CkappaAnswer::Kind::Exact);
  CHECK(ckappa_closed_cyclic(20).value == 13);
  CHECK(ckappa_closed_cyclic(45).kind == CkappaAnswer::Kind::EqualsKappa);
  CHECK(ckappa_closed_cyclic(45).value == 27);
  CHECK(ckappa_closed_cyclic(35).value == 25);
  CHECK(ckappa_closed_cyclic(30).kind == CkappaAnswer::Kind::EqualsKappa);
  CHECK_FALSE(ckappa_closed_cyclic(30).value.has_value());
}

TEST_CASE("equality characterization clauses") {
  CHECK_FALSE(equality_cyclic(20));
  CHECK(equality_cyclic(35));
  CHECK_FALSE(equality_cyclic(8));
  CHECK_FALSE(equality_cyclic(12));
  CHECK_FALSE(equality_cyclic(6));
  CHECK(equality_cyclic(45));
  CHECK(equality_cyclic(36));
}

TEST_CASE("proposition readings") {
  CHECK(proposition_min_class_cutset(12, 1, 2, PropositionReading::Statement));
  CHECK(proposition_min_class_cutset(12, 1, 2, PropositionReading::Proof));
  CHECK_FALSE(proposition_min_class_cutset(12, 1, 1, PropositionReading::Statement));
  CHECK_FALSE(proposition_min_class_cutset(12, 1, 1, PropositionReading::Proof));
  CHECK(proposition_min_class_cutset(45, 2, 1, PropositionReading::Proof));
  CHECK_FALSE(proposition_min_class_cutset(45, 2, 1, PropositionReading::Statement));
  // the readings genuinely differ: alpha_k = 2 with an odd prime and r >= 3
  CHECK(proposition_min_class_cutset(90, 2, 2, PropositionReading::Statement));
  CHECK_FALSE(proposition_min_class_cutset(90, 2, 2, PropositionReading::Proof));
  CHECK_THROWS_AS(proposition_min_class_cutset(8, 1, 1, PropositionReading::Proof),
                  std::invalid_argument);
  CHECK_THROWS_AS(proposition_min_class_cutset(12, 1, 3, PropositionReading::Proof),
                  std::invalid_argument);
}
