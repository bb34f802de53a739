#pragma once

#include <optional>
#include <vector>

#include "pgc/connectivity.hpp"
#include "pgc/numtheory.hpp"

namespace pgc {

// Closed-form quantities for power graphs of C_n, D_2n and Q_4n, as pure
// functions of n. Oracles elsewhere recompute everything from graphs; the
// harness compares the two.

// degree in P(C_n) of any element of order d (d | n)
i64 degree_cyclic(i64 n, i64 d);

// |N([x])| for x of order d in C_n (d | n)
i64 class_neighborhood_size(i64 n, i64 d);

// |N([x])| for x of order p_k^beta; k is the 1-based index into the ascending
// prime factorization of n, 1 <= beta <= alpha_k
i64 class_neighborhood_size_prime_power(i64 n, int k, int beta);

// class_neighborhood_size(n, p_k^beta) - class_neighborhood_size(n, p_k^gamma),
// beta < gamma; strictly positive; requires at least two prime factors
i64 neighborhood_gap(i64 n, int k, int beta, int gamma);

// The explicit minimal cutset O_n union of H_{n/(p_i p_k)} over i != k, as
// sorted element codes; requires at least two prime factors.
std::vector<int> yk_cutset(i64 n, int k);
i64 yk_size(i64 n, int k);

// phi(n) + n/p_r - p_r^(alpha_r - 1) phi(n / p_r^alpha_r); upper bound on
// kappa(P(C_n)); equals yk_size(n, r); requires at least two prime factors
i64 alpha_bound(i64 n);

enum class KappaKind { Exact, UpperBoundOnly };

struct KappaAnswer {
  KappaKind kind = KappaKind::Exact;
  i64 value = 0;
};

// exact n-1 for prime powers, exact phi(n) + p^(a-1) q^(b-1) for two prime
// factors, otherwise only the alpha_bound upper bound
KappaAnswer kappa_closed_cyclic(i64 n);

enum class VerdictReason {
  PrimeCount,        // fewer than two prime factors
  SmallestSemiprime, // n = p1 p2 with p1 in {2, 3}
  TwelveExclusion,   // n = 12
  PowerOfTwo,        // dicyclic: n is a power of two
  PrimeParameter,    // dicyclic: n is prime
  SixExclusion,      // dicyclic: n = 6
  AllConditionsHold
};

enum class WitnessRecipe {
  ThreePrimes,        // r >= 3
  P1AtLeastFive,      // r = 2, p1 >= 5
  A1Two_A2One,        // r = 2, p1 <= 3, alpha = (2, 1)
  A1AtLeastThree_A2One,
  A2AtLeastTwo
};

struct SeparabilityVerdict {
  bool separable = false;
  VerdictReason reason = VerdictReason::AllConditionsHold;
  std::optional<WitnessRecipe> recipe;  // set when separable (cyclic/dihedral)
};

SeparabilityVerdict separable_cyclic(i64 n);    // n >= 1
SeparabilityVerdict separable_dihedral(i64 n);  // n >= 3
SeparabilityVerdict separable_dicyclic(i64 n);  // n >= 2

// The explicit cyclic cutset construction matching the verdict's recipe,
// always containing O_1 and O_n; element codes of C_n, sorted. Throws when
// separable_cyclic(n) is false.
std::vector<int> witness_cyclic_cutset_cyclic(i64 n);

struct CkappaAnswer {
  enum class Kind { Infinite, Exact, EqualsKappa } kind = Kind::Infinite;
  std::optional<i64> value;  // set for Exact; set for EqualsKappa when r = 2
};

CkappaAnswer ckappa_closed_cyclic(i64 n);

// whether kappa(P(C_n)) and ckappa(P(C_n)) are claimed equal
bool equality_cyclic(i64 n);

enum class PropositionReading { Statement, Proof };

// Whether N([x]) for x of order p_k^beta is claimed to be a minimum cutset of
// P(C_n). Statement: beta = alpha_k and (alpha_k = 2 or n = p1 p2).
// Proof: beta = alpha_k and (p_k = 2 or r = 2). The harness audits both
// readings against brute force.
bool proposition_min_class_cutset(i64 n, int k, int beta, PropositionReading reading);

}  // namespace pgc
