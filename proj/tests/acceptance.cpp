// Acceptance suite: one criterion per entry, exact tolerances, one pass/fail
// line each. Run with no arguments for the full suite or with a criterion
// number (1-13) for a single one; the exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pgc/harness.hpp"

using namespace pgc;

namespace {

struct Criterion {
  int number;
  const char* title;
  std::function<bool(std::string&)> run;
};

std::vector<int> brute_class_nbhd_set(const PowerGraph& g, const std::vector<int>& members) {
  std::vector<char> in(g.n, 0), nb(g.n, 0);
  for (int v : members) in[v] = 1;
  for (int v : members)
    for (int w : g.neighbors(v))
      if (!in[w]) nb[w] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (nb[v]) out.push_back(v);
  return out;
}

SearchOptions class_opts(int cap = 24) {
  SearchOptions o;
  o.mode = SearchMode::ClassQuotient;
  o.class_cap = cap;
  return o;
}

SearchOptions vertex_opts(int cap = 40) {
  SearchOptions o;
  o.mode = SearchMode::VertexOracle;
  o.oracle_cap = cap;
  return o;
}

// 1. degree formula vs brute-force degrees, n <= 300, exact
bool crit_degree(std::string& detail) {
  i64 bad = 0;
  for (i64 n = 1; n <= 300; ++n) {
    const auto g = build(GroupSpec::cyclic(n));
    for (i64 d : divisors(n)) {
      const auto members = order_class(GroupSpec::cyclic(n), d).members;
      for (int x : members)
        if (degree_cyclic(n, d) != g.degree(x)) ++bad;
    }
  }
  detail = "mismatches: " + std::to_string(bad);
  return bad == 0;
}

// 2. |N([x])| formulas vs brute force, n <= 300, exact
bool crit_neighborhood(std::string& detail) {
  i64 bad = 0;
  for (i64 n = 1; n <= 300; ++n) {
    const auto g = build(GroupSpec::cyclic(n));
    const auto f = factorize(n);
    for (i64 d : divisors(n)) {
      const auto members = order_class(GroupSpec::cyclic(n), d).members;
      const i64 brute = static_cast<i64>(brute_class_nbhd_set(g, members).size());
      if (class_neighborhood_size(n, d) != brute) ++bad;
    }
    for (int k = 1; k <= f.prime_count(); ++k)
      for (int b = 1; b <= f.parts[k - 1].exponent; ++b) {
        const i64 d = ipow(f.parts[k - 1].prime, b);
        const auto members = order_class(GroupSpec::cyclic(n), d).members;
        const i64 brute = static_cast<i64>(brute_class_nbhd_set(g, members).size());
        if (class_neighborhood_size_prime_power(n, k, b) != brute) ++bad;
      }
  }
  detail = "mismatches: " + std::to_string(bad);
  return bad == 0;
}

// 3. strict monotonicity in the exponent plus the exact gap formula, n <= 300
bool crit_monotonicity(std::string& detail) {
  i64 bad = 0;
  for (i64 n = 1; n <= 300; ++n) {
    const auto f = factorize(n);
    for (int k = 1; k <= f.prime_count(); ++k)
      for (int b = 1; b <= f.parts[k - 1].exponent; ++b)
        for (int g2 = b + 1; g2 <= f.parts[k - 1].exponent; ++g2) {
          const i64 lo = class_neighborhood_size(n, ipow(f.parts[k - 1].prime, b));
          const i64 hi = class_neighborhood_size(n, ipow(f.parts[k - 1].prime, g2));
          if (lo <= hi) ++bad;
          if (f.prime_count() >= 2 && neighborhood_gap(n, k, b, g2) != lo - hi) ++bad;
        }
  }
  detail = "violations: " + std::to_string(bad);
  return bad == 0;
}

// 4. universal-vertex forcing: randomized subsets and kappa witnesses
bool crit_forcing(std::string& detail) {
  i64 bad = 0, graphs = 0;
  std::vector<GroupSpec> specs;
  for (i64 n = 2; n <= 60; ++n) specs.push_back(GroupSpec::cyclic(n));
  for (i64 n = 3; n <= 30; ++n) specs.push_back(GroupSpec::dihedral(n));
  for (i64 n = 2; n <= 15; ++n) specs.push_back(GroupSpec::dicyclic(n));
  std::mt19937_64 rng(1);
  for (const auto& spec : specs) {
    ++graphs;
    const auto g = build(spec);
    const auto universal = universal_vertices(g);
    for (int it = 0; it < 10'000; ++it) {
      const int omit = universal[rng() % universal.size()];
      std::vector<int> s;
      for (int v = 0; v < g.n; ++v)
        if (v != omit && (rng() & 1)) s.push_back(v);
      if (is_cutset(g, s)) ++bad;
    }
    const auto kr = vertex_connectivity(g);
    if (kr.witness)
      for (int u : universal)
        if (!std::binary_search(kr.witness->vertices.begin(), kr.witness->vertices.end(), u))
          ++bad;
  }
  detail = std::to_string(graphs) + " graphs, violations: " + std::to_string(bad);
  return bad == 0;
}

// 5. Y_k: cutset, full-component minimal, exact size; n <= 200
bool crit_yk(std::string& detail) {
  i64 bad = 0, checked = 0;
  for (i64 n = 2; n <= 200; ++n) {
    const auto f = factorize(n);
    if (f.prime_count() < 2) continue;
    const auto g = build(GroupSpec::cyclic(n));
    for (int k = 1; k <= f.prime_count(); ++k) {
      ++checked;
      const auto yk = yk_cutset(n, k);
      const i64 expect = euler_phi(n) + n / f.parts[k - 1].prime -
                         ipow(f.parts[k - 1].prime, f.parts[k - 1].exponent - 1) *
                             euler_phi(n / ipow(f.parts[k - 1].prime, f.parts[k - 1].exponent));
      if (static_cast<i64>(yk.size()) != expect || !is_cutset(g, yk) ||
          !is_minimal_cutset(g, yk))
        ++bad;
    }
  }
  detail = std::to_string(checked) + " cutsets, violations: " + std::to_string(bad);
  return bad == 0;
}

// 6. max-flow kappa equals phi(n) + p^(a-1) q^(b-1) for n = p^a q^b <= 200
bool crit_kappa2(std::string& detail) {
  i64 bad = 0, checked = 0;
  for (i64 n = 2; n <= 200; ++n) {
    const auto f = factorize(n);
    if (f.prime_count() != 2) continue;
    ++checked;
    const i64 expect = euler_phi(n) + ipow(f.parts[0].prime, f.parts[0].exponent - 1) *
                                          ipow(f.parts[1].prime, f.parts[1].exponent - 1);
    if (vertex_connectivity(build(GroupSpec::cyclic(n))).value.value != expect) ++bad;
  }
  detail = std::to_string(checked) + " instances, mismatches: " + std::to_string(bad);
  return bad == 0;
}

// 7. separability characterization vs exhaustive class search, 2 <= n <= 100
bool crit_separability(std::string& detail) {
  i64 bad = 0;
  for (i64 n = 2; n <= 100; ++n) {
    const auto g = build(GroupSpec::cyclic(n));
    const bool closed = separable_cyclic(n).separable;
    if (closed != is_cyclically_separable_graph(g, class_opts())) ++bad;
    if (closed && !is_cyclic_cutset(g, witness_cyclic_cutset_cyclic(n))) ++bad;
  }
  detail = "violations: " + std::to_string(bad);
  return bad == 0;
}

// 8. ckappa(C_4p) = phi(4p) + p for p in {5..23}, and ckappa(C_12) infinite
bool crit_fourp(std::string& detail) {
  i64 bad = 0;
  for (i64 p : {5, 7, 11, 13, 17, 19, 23}) {
    const auto r = cyclic_vertex_connectivity(build(GroupSpec::cyclic(4 * p)), class_opts());
    if (r.value.infinite || r.value.value != euler_phi(4 * p) + p) ++bad;
  }
  if (!cyclic_vertex_connectivity(build(GroupSpec::cyclic(12)), class_opts()).value.infinite) ++bad;
  detail = "violations: " + std::to_string(bad);
  return bad == 0;
}

// 9. equality characterization: ckappa = kappa exactly when n is not 4p,
//    over all separable n <= 100 (faithful to the claim; see NOTES below)
bool crit_equality(std::string& detail) {
  std::vector<i64> bad;
  for (i64 n = 2; n <= 100; ++n) {
    if (!separable_cyclic(n).separable) continue;
    const auto g = build(GroupSpec::cyclic(n));
    const i64 kappa = vertex_connectivity(g).value.value;
    const auto ck = cyclic_vertex_connectivity(g, class_opts());
    const auto f = factorize(n);
    const bool is_four_p = f.prime_count() == 2 && f.parts[0].prime == 2 &&
                           f.parts[0].exponent == 2 && f.parts[1].exponent == 1;
    const bool equal = !ck.value.infinite && ck.value.value == kappa;
    if (equal != !is_four_p) bad.push_back(n);
  }
  std::ostringstream os;
  os << "disagreements: " << bad.size();
  if (!bad.empty()) {
    os << " at n =";
    for (i64 n : bad) os << " " << n;
  }
  detail = os.str();
  return bad.empty();
}

// 10. dihedral: kappa = 1, separability, ckappa equals the cyclic value,
//     kappa != ckappa, for 3 <= n <= 50
bool crit_dihedral(std::string& detail) {
  i64 bad = 0;
  for (i64 n = 3; n <= 50; ++n) {
    const auto g = build(GroupSpec::dihedral(n));
    if (vertex_connectivity(g).value.value != 1) ++bad;
    const bool closed = separable_dihedral(n).separable;
    if (closed != is_cyclically_separable_graph(g, class_opts())) ++bad;
    const auto ck_d = cyclic_vertex_connectivity(g, class_opts());
    const auto ck_c = cyclic_vertex_connectivity(build(GroupSpec::cyclic(n)), class_opts());
    if (!(ck_d.value == ck_c.value)) ++bad;
    if (!ck_d.value.infinite && ck_d.value.value == 1) ++bad;
  }
  detail = "violations: " + std::to_string(bad);
  return bad == 0;
}

// 11. dicyclic: kappa = 2, clauses equivalent to the C_2n clauses,
//     kappa != ckappa, for 2 <= n <= 24
bool crit_dicyclic(std::string& detail) {
  i64 bad = 0;
  for (i64 n = 2; n <= 24; ++n) {
    const auto g = build(GroupSpec::dicyclic(n));
    if (vertex_connectivity(g).value.value != 2) ++bad;
    if (separable_dicyclic(n).separable != separable_cyclic(2 * n).separable) ++bad;
    if (bounded_cyclic_cutset(g, 2).has_value()) ++bad;  // no cyclic cutset as small as kappa
  }
  detail = "violations: " + std::to_string(bad);
  return bad == 0;
}

// 12. oracle cross-validation: class vs vertex mode on every power graph with
//     at most 40 vertices; max-flow kappa vs exhaustive search on graphs with
//     at most 12 vertices including 200 random ones
bool crit_crossval(std::string& detail) {
  i64 bad = 0, graphs = 0;
  std::vector<GroupSpec> specs;
  for (i64 n = 1; n <= 40; ++n) specs.push_back(GroupSpec::cyclic(n));
  for (i64 n = 3; n <= 20; ++n) specs.push_back(GroupSpec::dihedral(n));
  for (i64 n = 2; n <= 10; ++n) specs.push_back(GroupSpec::dicyclic(n));
  for (const auto& spec : specs) {
    ++graphs;
    const auto g = build(spec);
    const auto v = cyclic_vertex_connectivity(g, vertex_opts());
    const auto c = cyclic_vertex_connectivity(g, class_opts(40));
    if (!(v.value == c.value)) ++bad;
    if (v.witness && c.witness && v.witness->vertices != c.witness->vertices) ++bad;
  }

  i64 kappa_checked = 0;
  for (const auto& spec : specs) {
    const auto g = build(spec);
    if (g.n > 12) continue;
    ++kappa_checked;
    if (vertex_connectivity(g).value.value != oracles::exhaustive_kappa(g)) ++bad;
  }
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const auto g = oracles::random_graph(n, 0.15 + 0.7 * (rng() % 100) / 100.0, rng);
    ++kappa_checked;
    if (vertex_connectivity(g).value.value != oracles::exhaustive_kappa(g)) ++bad;
  }
  detail = std::to_string(graphs) + " power graphs + " + std::to_string(kappa_checked) +
           " kappa instances, violations: " + std::to_string(bad);
  return bad == 0;
}

// 13. the proposition audit table exists, covers n <= 100 and is deterministic
bool crit_audit(std::string& detail) {
  const auto a = verify_lemma(LemmaCheckId::P_MINCUT, 100);
  const auto b = verify_lemma(LemmaCheckId::P_MINCUT, 100);
  const bool ok = a.counterexamples == b.counterexamples && a.checked == 99;
  detail = "rows: " + std::to_string(a.counterexamples.size()) +
           (ok ? ", deterministic" : ", NOT deterministic");
  return ok;
}

const Criterion kCriteria[] = {
    {1, "degree formula matches brute force (n <= 300)", crit_degree},
    {2, "neighborhood size formulas match brute force (n <= 300)", crit_neighborhood},
    {3, "neighborhood monotonicity and exact gap (n <= 300)", crit_monotonicity},
    {4, "universal-vertex forcing (10^4 samples per graph, orders <= 60)", crit_forcing},
    {5, "Y_k minimal cutsets of the stated size (n <= 200)", crit_yk},
    {6, "exact kappa for two prime factors via max flow (n <= 200)", crit_kappa2},
    {7, "cyclic separability vs exhaustive search (n <= 100)", crit_separability},
    {8, "ckappa(C_4p) = phi + p and ckappa(C_12) infinite", crit_fourp},
    {9, "kappa-ckappa equality exactly off the 4p family (n <= 100)", crit_equality},
    {10, "dihedral kappa, separability, reduction, inequality (n <= 50)", crit_dihedral},
    {11, "dicyclic kappa, separability clauses, inequality (n <= 24)", crit_dicyclic},
    {12, "class/vertex search agreement; max-flow vs exhaustive kappa", crit_crossval},
    {13, "proposition audit table produced and deterministic (n <= 100)", crit_audit},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const auto& c : kCriteria) {
    if (only && c.number != only) continue;
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = c.run(detail);
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("C%02d %-4s %-62s %s [%.1f s]\n", c.number, ok ? "PASS" : "FAIL", c.title,
                detail.c_str(), sec);
    if (!ok) ++failures;
  }
  if (!only && failures)
    std::printf("NOTE: see NOTES.md for the analysis of expected criterion failures.\n");
  return failures;
}
