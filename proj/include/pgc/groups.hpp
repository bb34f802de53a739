#pragma once

#include <string>
#include <vector>

#include "pgc/numtheory.hpp"

namespace pgc {

enum class Family { Cyclic, Dihedral, Dicyclic };

std::string family_name(Family f);

// Group family plus its size parameter n. Element codes are the stable public
// identity of vertices and of serialized witnesses:
//   Cyclic(n):   codes 0..n-1 are the residues, identity 0
//   Dihedral(n): codes 0..n-1 are a^i, codes n..2n-1 are a^(c-n) b
//   Dicyclic(n): codes 0..2n-1 are a^i, codes 2n..4n-1 are a^(c-2n) b
struct GroupSpec {
  Family family = Family::Cyclic;
  i64 n = 1;

  static GroupSpec cyclic(i64 n);    // n >= 1
  static GroupSpec dihedral(i64 n);  // n >= 3
  static GroupSpec dicyclic(i64 n);  // n >= 2

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

i64 group_order(const GroupSpec& g);

// Group product of element codes, via the rewriting rules of the dihedral and
// dicyclic presentations on (rotation exponent, flip bit) normal forms.
int mul(const GroupSpec& g, int x, int y);

i64 element_order(const GroupSpec& g, int x);
std::vector<int> cyclic_subgroup(const GroupSpec& g, int x);  // sorted codes
bool power_adjacent(const GroupSpec& g, int x, int y);

struct OrderClass {
  i64 d = 1;
  std::vector<int> members;   // O_d, sorted codes
  std::vector<int> subgroup;  // H_d, sorted codes
};

// Cyclic family only; d must divide n.
OrderClass order_class(const GroupSpec& g, i64 d);

}  // namespace pgc
