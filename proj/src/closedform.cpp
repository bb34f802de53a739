#include "pgc/closedform.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pgc {

namespace {

void require_divisor(i64 n, i64 d, const char* who) {
  if (d < 1 || n < 1 || n % d != 0)
    throw std::invalid_argument(std::string(who) + ": d = " + std::to_string(d) +
                                " does not divide n = " + std::to_string(n));
}

const PrimePower& part(const Factorization& f, int k, const char* who) {
  if (k < 1 || k > f.prime_count())
    throw std::invalid_argument(std::string(who) + ": prime index k out of range");
  return f.parts[k - 1];
}

i64 product_excluding(const Factorization& f, int k) {
  i64 p = 1;
  for (int i = 0; i < f.prime_count(); ++i)
    if (i != k - 1) p *= ipow(f.parts[i].prime, f.parts[i].exponent);
  return p;
}

}  // namespace

i64 degree_cyclic(i64 n, i64 d) {
  require_divisor(n, d, "degree_cyclic");
  return d + phi_divisor_sum(n, n / d) - euler_phi(d) - 1;
}

i64 class_neighborhood_size(i64 n, i64 d) {
  require_divisor(n, d, "class_neighborhood_size");
  return d - 2 * euler_phi(d) + phi_divisor_sum(n, n / d);
}

i64 class_neighborhood_size_prime_power(i64 n, int k, int beta) {
  const auto f = factorize(n);
  const auto& pk = part(f, k, "class_neighborhood_size_prime_power");
  if (beta < 1 || beta > pk.exponent)
    throw std::invalid_argument("class_neighborhood_size_prime_power: beta out of range");
  const i64 pb = ipow(pk.prime, beta);
  return pb - 2 * euler_phi(pb) +
         (ipow(pk.prime, pk.exponent) - ipow(pk.prime, beta - 1)) * product_excluding(f, k);
}

i64 neighborhood_gap(i64 n, int k, int beta, int gamma) {
  const auto f = factorize(n);
  if (f.prime_count() < 2)
    throw std::invalid_argument("neighborhood_gap: n must have at least two prime factors");
  const auto& pk = part(f, k, "neighborhood_gap");
  if (beta < 1 || beta >= gamma || gamma > pk.exponent)
    throw std::invalid_argument("neighborhood_gap: need 1 <= beta < gamma <= alpha_k");
  return (ipow(pk.prime, gamma - 1) - ipow(pk.prime, beta - 1)) *
         (pk.prime - 2 + product_excluding(f, k));
}

std::vector<int> yk_cutset(i64 n, int k) {
  const auto f = factorize(n);
  if (f.prime_count() < 2)
    throw std::invalid_argument("yk_cutset: n must have at least two prime factors");
  const auto& pk = part(f, k, "yk_cutset");
  const GroupSpec spec = GroupSpec::cyclic(n);
  std::set<int> out;
  for (int g : order_class(spec, n).members) out.insert(g);
  for (int i = 1; i <= f.prime_count(); ++i) {
    if (i == k) continue;
    const i64 m = n / (f.parts[i - 1].prime * pk.prime);
    for (int h : order_class(spec, m).subgroup) out.insert(h);
  }
  return {out.begin(), out.end()};
}

i64 yk_size(i64 n, int k) {
  const auto f = factorize(n);
  if (f.prime_count() < 2)
    throw std::invalid_argument("yk_size: n must have at least two prime factors");
  const auto& pk = part(f, k, "yk_size");
  return euler_phi(n) + n / pk.prime -
         ipow(pk.prime, pk.exponent - 1) * euler_phi(n / ipow(pk.prime, pk.exponent));
}

i64 alpha_bound(i64 n) {
  const auto f = factorize(n);
  if (f.prime_count() < 2)
    throw std::invalid_argument("alpha_bound: n must have at least two prime factors");
  return yk_size(n, f.prime_count());
}

KappaAnswer kappa_closed_cyclic(i64 n) {
  const auto f = factorize(n);
  if (f.prime_count() <= 1) return {KappaKind::Exact, n - 1};
  if (f.prime_count() == 2) {
    const i64 v = euler_phi(n) + ipow(f.parts[0].prime, f.parts[0].exponent - 1) *
                                     ipow(f.parts[1].prime, f.parts[1].exponent - 1);
    return {KappaKind::Exact, v};
  }
  return {KappaKind::UpperBoundOnly, alpha_bound(n)};
}

SeparabilityVerdict separable_cyclic(i64 n) {
  const auto f = factorize(n);
  if (f.prime_count() < 2) return {false, VerdictReason::PrimeCount, std::nullopt};
  const i64 p1 = f.parts[0].prime;
  const int a1 = f.parts[0].exponent;
  const int a2 = f.parts[1].exponent;
  const bool squarefree_semiprime = f.prime_count() == 2 && a1 == 1 && a2 == 1;
  if (squarefree_semiprime && (p1 == 2 || p1 == 3))
    return {false, VerdictReason::SmallestSemiprime, std::nullopt};
  if (n == 12) return {false, VerdictReason::TwelveExclusion, std::nullopt};

  SeparabilityVerdict v{true, VerdictReason::AllConditionsHold, std::nullopt};
  if (f.prime_count() >= 3)
    v.recipe = WitnessRecipe::ThreePrimes;
  else if (p1 >= 5)
    v.recipe = WitnessRecipe::P1AtLeastFive;
  else if (a2 >= 2)
    v.recipe = WitnessRecipe::A2AtLeastTwo;
  else if (a1 == 2)
    v.recipe = WitnessRecipe::A1Two_A2One;
  else
    v.recipe = WitnessRecipe::A1AtLeastThree_A2One;
  return v;
}

SeparabilityVerdict separable_dihedral(i64 n) {
  if (n < 3) throw std::invalid_argument("separable_dihedral: need n >= 3");
  return separable_cyclic(n);
}

SeparabilityVerdict separable_dicyclic(i64 n) {
  if (n < 2) throw std::invalid_argument("separable_dicyclic: need n >= 2");
  const auto f = factorize(n);
  if (f.prime_count() == 1 && f.parts[0].prime == 2)
    return {false, VerdictReason::PowerOfTwo, std::nullopt};
  if (f.prime_count() == 1 && f.parts[0].exponent == 1)
    return {false, VerdictReason::PrimeParameter, std::nullopt};
  if (n == 6) return {false, VerdictReason::SixExclusion, std::nullopt};
  return {true, VerdictReason::AllConditionsHold, std::nullopt};
}

std::vector<int> witness_cyclic_cutset_cyclic(i64 n) {
  const auto verdict = separable_cyclic(n);
  if (!verdict.separable)
    throw std::invalid_argument("witness_cyclic_cutset_cyclic: P(C_" + std::to_string(n) +
                                ") is not cyclically separable");
  const auto f = factorize(n);
  const GroupSpec spec = GroupSpec::cyclic(n);
  const i64 p1 = f.parts[0].prime;
  const i64 p2 = f.prime_count() >= 2 ? f.parts[1].prime : 0;
  const int a1 = f.parts[0].exponent;
  const int a2 = f.prime_count() >= 2 ? f.parts[1].exponent : 0;

  // the set of elements kept OUT of the cutset
  std::set<int> survivors;
  auto keep_class = [&](i64 d) {
    for (int x : order_class(spec, d).members) survivors.insert(x);
  };

  switch (*verdict.recipe) {
    case WitnessRecipe::ThreePrimes: {
      // survivors: H_{p1 p2} minus identity, plus O_{p3}
      for (int x : order_class(spec, p1 * p2).subgroup)
        if (x != 0) survivors.insert(x);
      keep_class(f.parts[2].prime);
      break;
    }
    case WitnessRecipe::P1AtLeastFive:
      keep_class(p1);
      keep_class(p2);
      break;
    case WitnessRecipe::A1Two_A2One:
      // the cutset is O_1, O_n and O_{p1 p2}; everything else survives
      keep_class(p1);
      keep_class(p1 * p1);
      keep_class(p2);
      break;
    case WitnessRecipe::A1AtLeastThree_A2One:
      keep_class(ipow(p1, a1));
      keep_class(p1 * p2);
      keep_class(p2);
      break;
    case WitnessRecipe::A2AtLeastTwo:
      keep_class(p1);
      keep_class(p1 * p2);
      keep_class(ipow(p2, a2));
      break;
  }

  std::vector<int> cutset;
  for (i64 x = 0; x < n; ++x)
    if (!survivors.count(static_cast<int>(x))) cutset.push_back(static_cast<int>(x));
  return cutset;
}

CkappaAnswer ckappa_closed_cyclic(i64 n) {
  if (!separable_cyclic(n).separable) return {CkappaAnswer::Kind::Infinite, std::nullopt};
  const auto f = factorize(n);
  // n = 4p for an odd prime p (p >= 5; n = 12 is not separable)
  if (f.prime_count() == 2 && f.parts[0].prime == 2 && f.parts[0].exponent == 2 &&
      f.parts[1].exponent == 1)
    return {CkappaAnswer::Kind::Exact, euler_phi(n) + f.parts[1].prime};
  CkappaAnswer a{CkappaAnswer::Kind::EqualsKappa, std::nullopt};
  if (f.prime_count() == 2) a.value = kappa_closed_cyclic(n).value;
  return a;
}

bool equality_cyclic(i64 n) {
  const auto f = factorize(n);
  if (f.prime_count() < 2) return false;
  if (f.prime_count() == 2 && f.parts[0].exponent == 1 && f.parts[1].exponent == 1 &&
      f.parts[0].prime <= 3)
    return false;
  if (f.prime_count() == 2 && f.parts[0].prime == 2 && f.parts[0].exponent == 2 &&
      f.parts[1].exponent == 1)
    return false;  // n = 4p, odd prime p (includes 12)
  return true;
}

bool proposition_min_class_cutset(i64 n, int k, int beta, PropositionReading reading) {
  const auto f = factorize(n);
  if (f.prime_count() < 2)
    throw std::invalid_argument("proposition_min_class_cutset: need at least two prime factors");
  const auto& pk = part(f, k, "proposition_min_class_cutset");
  if (beta < 1 || beta > pk.exponent)
    throw std::invalid_argument("proposition_min_class_cutset: beta out of range");
  if (beta != pk.exponent) return false;
  if (reading == PropositionReading::Statement) {
    const bool two_distinct_primes =
        f.prime_count() == 2 && f.parts[0].exponent == 1 && f.parts[1].exponent == 1;
    return pk.exponent == 2 || two_distinct_primes;
  }
  return pk.prime == 2 || f.prime_count() == 2;
}

}  // namespace pgc
