#include "pgc/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pgc {

std::string family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::Dicyclic: return "dicyclic";
  }
  return "?";
}

GroupSpec GroupSpec::cyclic(i64 n) {
  if (n < 1 || n > kMaxArgument) throw std::invalid_argument("cyclic: need 1 <= n <= 2^32");
  return {Family::Cyclic, n};
}

GroupSpec GroupSpec::dihedral(i64 n) {
  if (n < 3) throw std::invalid_argument("dihedral: need n >= 3");
  if (n > kMaxArgument) throw std::invalid_argument("dihedral: n exceeds supported range");
  return {Family::Dihedral, n};
}

GroupSpec GroupSpec::dicyclic(i64 n) {
  if (n < 2) throw std::invalid_argument("dicyclic: need n >= 2");
  if (n > kMaxArgument) throw std::invalid_argument("dicyclic: n exceeds supported range");
  return {Family::Dicyclic, n};
}

i64 group_order(const GroupSpec& g) {
  switch (g.family) {
    case Family::Cyclic: return g.n;
    case Family::Dihedral: return 2 * g.n;
    case Family::Dicyclic: return 4 * g.n;
  }
  return 0;
}

namespace {

void check_element(const GroupSpec& g, int x, const char* who) {
  if (x < 0 || x >= group_order(g))
    throw std::invalid_argument(std::string(who) + ": element code out of range");
}

// (rotation exponent, flip bit) decomposition for the two non-abelian families.
struct Word {
  i64 rot;
  int flip;
};

Word decompose(const GroupSpec& g, int x) {
  const i64 half = (g.family == Family::Dihedral) ? g.n : 2 * g.n;
  return x < half ? Word{x, 0} : Word{x - half, 1};
}

int compose(const GroupSpec& g, Word w) {
  const i64 half = (g.family == Family::Dihedral) ? g.n : 2 * g.n;
  return static_cast<int>(w.flip ? half + w.rot : w.rot);
}

}  // namespace

int mul(const GroupSpec& g, int x, int y) {
  check_element(g, x, "mul");
  check_element(g, y, "mul");
  if (g.family == Family::Cyclic) return static_cast<int>((x + y) % g.n);

  const i64 half = (g.family == Family::Dihedral) ? g.n : 2 * g.n;
  Word a = decompose(g, x), b = decompose(g, y);
  // b a^j = a^-j b in both presentations
  i64 rot = a.flip ? (a.rot - b.rot) % half : (a.rot + b.rot) % half;
  if (rot < 0) rot += half;
  int flip = a.flip ^ b.flip;
  if (g.family == Family::Dicyclic && a.flip && b.flip) {
    // b^2 = a^n
    rot = (rot + g.n) % half;
  }
  return compose(g, {rot, flip});
}

i64 element_order(const GroupSpec& g, int x) {
  check_element(g, x, "element_order");
  if (g.family == Family::Cyclic) return g.n / std::gcd<i64>(x, g.n);
  i64 ord = 1;
  int p = x;
  while (p != 0) {
    p = mul(g, p, x);
    ++ord;
  }
  return ord;
}

std::vector<int> cyclic_subgroup(const GroupSpec& g, int x) {
  check_element(g, x, "cyclic_subgroup");
  std::vector<int> sub{0};
  int p = x;
  while (p != 0) {
    sub.push_back(p);
    p = mul(g, p, x);
  }
  std::sort(sub.begin(), sub.end());
  return sub;
}

bool power_adjacent(const GroupSpec& g, int x, int y) {
  check_element(g, x, "power_adjacent");
  check_element(g, y, "power_adjacent");
  if (x == y) return false;
  const auto sx = cyclic_subgroup(g, x);
  if (std::binary_search(sx.begin(), sx.end(), y)) return true;
  const auto sy = cyclic_subgroup(g, y);
  return std::binary_search(sy.begin(), sy.end(), x);
}

OrderClass order_class(const GroupSpec& g, i64 d) {
  if (g.family != Family::Cyclic)
    throw std::invalid_argument("order_class: only defined for the cyclic family");
  if (d < 1 || g.n % d != 0)
    throw std::invalid_argument("order_class: d = " + std::to_string(d) +
                                " does not divide n = " + std::to_string(g.n));
  OrderClass oc;
  oc.d = d;
  const i64 step = g.n / d;
  for (i64 i = 0; i < g.n; i += step) {
    oc.subgroup.push_back(static_cast<int>(i));
    if (d == g.n / std::gcd<i64>(i, g.n)) oc.members.push_back(static_cast<int>(i));
  }
  return oc;
}

}  // namespace pgc
