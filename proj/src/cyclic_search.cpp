#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>

#include "pgc/connectivity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Exact cyclic vertex connectivity.
//
// Both modes search the same candidate family: every minimum cyclic cutset S
// equals N(C) for each component C of g - S that contains a cycle (dropping a
// vertex of S not adjacent to such a component leaves a smaller cyclic
// cutset). So it suffices to enumerate connected vertex sets C containing a
// cycle, take S = N(C), and keep S whenever some other component of g - S
// also contains a cycle. Two prunes keep this exhaustive search tractable:
//   - universal vertices belong to every cutset, so C avoids them;
//   - a simplicial vertex (neighborhood induces a clique) can never lie in a
//     minimum cyclic cutset, since members of distinct components are never
//     adjacent; so a simplicial vertex adjacent to C must be inside C, and
//     branches that exclude one are dead.
// Class mode runs the identical search over the twin-class quotient, because
// minimum cyclic cutsets are unions of twin classes (re-adding a partial
// class attaches it to its siblings' component without merging others).

namespace pgc {

namespace {

bool lex_less(u64 a, u64 b) {
  u64 d = a ^ b;
  if (!d) return false;
  return (a & (d & -d)) != 0;
}

struct Best {
  bool found = false;
  i64 size = 0;
  u64 cut_mask = 0;  // tie-break key: vertex mask (vertex mode) or class-index mask (class mode)

  void offer(i64 sz, u64 mask) {
    if (!found || sz < size || (sz == size && lex_less(mask, cut_mask))) {
      found = true;
      size = sz;
      cut_mask = mask;
    }
  }
  void merge(const Best& o) {
    if (o.found) offer(o.size, o.cut_mask);
  }
};

// ---------------------------------------------------------------------------
// shared enumeration skeleton: connected subsets over a <=64-node adjacency,
// visited exactly once, with forced inclusion of simplicial frontier nodes
// ---------------------------------------------------------------------------

template <typename Node, typename Eval>
struct ConnectedEnumerator {
  const std::vector<u64>& adj;
  u64 simplicial;
  const Node* nodes;
  Eval& eval;
  std::atomic<bool>* stop;

  // S connected; ext = frontier candidates; pool = available, not yet adjacent
  void rec(u64 s_mask, i64 verts, i64 edges, u64 nbhd, u64 ext, u64 pool) {
    if (stop && stop->load(std::memory_order_relaxed)) return;
    if (verts >= 3 && edges >= verts) eval(s_mask, nbhd);
    u64 local = ext;
    while (local) {
      const int u = std::countr_zero(local);
      const u64 ubit = u64(1) << u;
      local ^= ubit;
      const u64 newly = adj[u] & pool;
      rec(s_mask | ubit, verts + nodes[u].weight,
          edges + nodes[u].internal_edges + nodes[u].cross_edges(s_mask & adj[u]),
          nbhd | adj[u], local | newly, pool & ~newly);
      if (simplicial & ubit) return;  // excluding a simplicial frontier node is never optimal
    }
  }

  void run_root(int r, u64 universe) {
    const u64 avail = universe & ~((u64(2) << r) - 1);  // strictly above r
    const u64 rbit = u64(1) << r;
    rec(rbit, nodes[r].weight, nodes[r].internal_edges, adj[r], adj[r] & avail,
        avail & ~adj[r]);
  }
};

struct VertexNode {
  i64 weight = 1;
  i64 internal_edges = 0;
  i64 cross_edges(u64 joint) const { return std::popcount(joint); }
};

struct ClassNode {
  i64 weight = 0;
  i64 internal_edges = 0;
  const i64* sizes = nullptr;
  i64 cross_edges(u64 joint) const {
    i64 e = 0;
    while (joint) {
      e += weight * sizes[std::countr_zero(joint)];
      joint &= joint - 1;
    }
    return e;
  }
};

// simplicial = neighborhood induces a clique
u64 simplicial_mask_vertices(const std::vector<u64>& adj, int n, u64 universe) {
  u64 out = 0;
  for (int v = 0; v < n; ++v) {
    if (!(universe >> v & 1)) continue;
    bool ok = true;
    u64 nb = adj[v] & ~(u64(1) << v);
    for (u64 m = nb; ok && m; m &= m - 1) {
      const int w = std::countr_zero(m);
      ok = (nb & ~adj[w] & ~(u64(1) << w)) == 0;
    }
    if (ok) out |= u64(1) << v;
  }
  return out;
}

// ---------------------------------------------------------------------------
// vertex mode
// ---------------------------------------------------------------------------

struct VertexSearchCtx {
  int n = 0;
  std::vector<u64> adj;
  u64 all = 0, universe = 0, simplicial = 0;
  std::vector<VertexNode> nodes;
};

VertexSearchCtx make_vertex_ctx(const PowerGraph& g) {
  VertexSearchCtx c;
  c.n = g.n;
  c.adj.assign(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.neighbors(u)) c.adj[u] |= u64(1) << v;
  c.all = (g.n == 64) ? ~u64(0) : (u64(1) << g.n) - 1;
  u64 universal = 0;
  for (int v : universal_vertices(g)) universal |= u64(1) << v;
  c.universe = c.all & ~universal;
  c.simplicial = simplicial_mask_vertices(c.adj, g.n, c.universe);
  c.nodes.assign(g.n, VertexNode{});
  return c;
}

bool mask_rest_has_cycle(const std::vector<u64>& adj, u64 rest) {
  while (rest) {
    u64 comp = u64(1) << std::countr_zero(rest);
    for (;;) {
      u64 grow = 0;
      for (u64 m = comp; m; m &= m - 1) grow |= adj[std::countr_zero(m)];
      grow &= rest;
      if ((grow | comp) == comp) break;
      comp |= grow;
    }
    rest &= ~comp;
    const int verts = std::popcount(comp);
    if (verts >= 3) {
      i64 twice = 0;
      for (u64 m = comp; m; m &= m - 1) twice += std::popcount(adj[std::countr_zero(m)] & comp);
      if (twice / 2 >= verts) return true;
    }
  }
  return false;
}

// Runs the candidate enumeration; separability-only queries pass stop_early.
Best vertex_mode_search(const VertexSearchCtx& c, ExecPolicy policy, std::atomic<bool>* stop_early) {
  std::vector<int> roots;
  for (int r = 0; r < c.n; ++r)
    if (c.universe >> r & 1) roots.push_back(r);

  const int nroots = static_cast<int>(roots.size());
  std::vector<Best> per_root(nroots);

  auto run_one = [&](int i) {
    auto eval = [&](u64 s_mask, u64 nbhd) {
      const u64 cut = nbhd & ~s_mask;
      const u64 rest = c.all & ~s_mask & ~cut;
      if (!rest) return;
      if (!mask_rest_has_cycle(c.adj, rest)) return;
      per_root[i].offer(std::popcount(cut), cut);
      if (stop_early) stop_early->store(true, std::memory_order_relaxed);
    };
    ConnectedEnumerator<VertexNode, decltype(eval)> en{c.adj, c.simplicial, c.nodes.data(), eval,
                                                       stop_early};
    en.run_root(roots[i], c.universe);
  };

#ifdef _OPENMP
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < nroots; ++i) run_one(i);
  } else {
    for (int i = 0; i < nroots; ++i) run_one(i);
  }
#else
  (void)policy;
  for (int i = 0; i < nroots; ++i) run_one(i);
#endif

  Best best;
  for (const Best& b : per_root) best.merge(b);
  return best;
}

// ---------------------------------------------------------------------------
// class mode
// ---------------------------------------------------------------------------

struct ClassSearchCtx {
  int k = 0;
  std::vector<u64> adj;
  std::vector<i64> sizes;
  std::vector<char> clique;
  u64 all = 0, universe = 0, simplicial = 0;
  std::vector<ClassNode> nodes;
  const TwinClassGraph* twins = nullptr;
};

ClassSearchCtx make_class_ctx(const PowerGraph& g, const TwinClassGraph& q) {
  ClassSearchCtx c;
  c.k = q.count();
  c.twins = &q;
  c.adj.assign(c.k, 0);
  for (int a = 0; a < c.k; ++a)
    for (int b = 0; b < c.k; ++b)
      if (a != b && q.adjacent(a, b)) c.adj[a] |= u64(1) << b;
  c.sizes.resize(c.k);
  c.clique.resize(c.k);
  for (int a = 0; a < c.k; ++a) {
    c.sizes[a] = static_cast<i64>(q.classes[a].members.size());
    c.clique[a] = q.classes[a].is_clique;
  }
  c.all = (c.k == 64) ? ~u64(0) : (u64(1) << c.k) - 1;

  u64 universal = 0;
  for (int v : universal_vertices(g)) universal |= u64(1) << q.class_of[v];
  c.universe = c.all & ~universal;

  // a member of class a is simplicial iff every neighbouring class is a
  // clique class and all neighbouring classes are pairwise adjacent
  for (int a = 0; a < c.k; ++a) {
    if (!(c.universe >> a & 1)) continue;
    bool ok = true;
    for (u64 m = c.adj[a]; ok && m; m &= m - 1) {
      const int b = std::countr_zero(m);
      ok = c.clique[b] && (c.adj[a] & ~c.adj[b] & ~(u64(1) << b)) == 0;
    }
    if (ok) c.simplicial |= u64(1) << a;
  }

  c.nodes.resize(c.k);
  for (int a = 0; a < c.k; ++a) {
    c.nodes[a].weight = c.sizes[a];
    c.nodes[a].internal_edges = c.clique[a] ? c.sizes[a] * (c.sizes[a] - 1) / 2 : 0;
    c.nodes[a].sizes = c.sizes.data();
  }
  return c;
}

bool class_rest_has_cycle(const ClassSearchCtx& c, u64 rest) {
  while (rest) {
    u64 comp = u64(1) << std::countr_zero(rest);
    for (;;) {
      u64 grow = 0;
      for (u64 m = comp; m; m &= m - 1) grow |= c.adj[std::countr_zero(m)];
      grow &= rest;
      if ((grow | comp) == comp) break;
      comp |= grow;
    }
    rest &= ~comp;
    i64 verts = 0, edges = 0;
    for (u64 m = comp; m; m &= m - 1) {
      const int a = std::countr_zero(m);
      verts += c.sizes[a];
      edges += c.nodes[a].internal_edges;
      // each cross pair once: only partners below a
      for (u64 j = c.adj[a] & comp & ((u64(1) << a) - 1); j; j &= j - 1)
        edges += c.sizes[a] * c.sizes[std::countr_zero(j)];
    }
    if (verts >= 3 && edges >= verts) return true;
  }
  return false;
}

Best class_mode_search(const ClassSearchCtx& c, ExecPolicy policy, std::atomic<bool>* stop_early) {
  std::vector<int> roots;
  for (int r = 0; r < c.k; ++r)
    if (c.universe >> r & 1) roots.push_back(r);

  const int nroots = static_cast<int>(roots.size());
  std::vector<Best> per_root(nroots);

  auto run_one = [&](int i) {
    auto eval = [&](u64 s_mask, u64 nbhd) {
      const u64 cut = nbhd & ~s_mask;
      const u64 rest = c.all & ~s_mask & ~cut;
      if (!rest) return;
      if (!class_rest_has_cycle(c, rest)) return;
      i64 weight = 0;
      for (u64 m = cut; m; m &= m - 1) weight += c.sizes[std::countr_zero(m)];
      per_root[i].offer(weight, cut);
      if (stop_early) stop_early->store(true, std::memory_order_relaxed);
    };
    ConnectedEnumerator<ClassNode, decltype(eval)> en{c.adj, c.simplicial, c.nodes.data(), eval,
                                                      stop_early};
    en.run_root(roots[i], c.universe);
  };

#ifdef _OPENMP
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < nroots; ++i) run_one(i);
  } else {
    for (int i = 0; i < nroots; ++i) run_one(i);
  }
#else
  (void)policy;
  for (int i = 0; i < nroots; ++i) run_one(i);
#endif

  Best best;
  for (const Best& b : per_root) best.merge(b);
  return best;
}

void check_caps(const PowerGraph& g, const SearchOptions& opt, const TwinClassGraph* q) {
  if (opt.mode == SearchMode::VertexOracle) {
    if (g.n > opt.oracle_cap)
      throw CapExceeded("vertex-mode oracle refused: " + std::to_string(g.n) +
                        " vertices exceed the oracle cap of " + std::to_string(opt.oracle_cap));
    if (g.n > 64) throw CapExceeded("vertex-mode oracle refused: more than 64 vertices");
  } else {
    if (g.n > opt.vertex_cap)
      throw CapExceeded("class-mode search refused: " + std::to_string(g.n) +
                        " vertices exceed the cap of " + std::to_string(opt.vertex_cap));
    const int k = q->count();
    int eligible = 0;
    u64 universal_classes = 0;
    for (int v : universal_vertices(g)) universal_classes |= u64(1) << (q->class_of[v] & 63);
    for (int a = 0; a < k; ++a)
      if (a >= 64 || !(universal_classes >> a & 1)) ++eligible;
    if (eligible > opt.class_cap)
      throw CapExceeded("class-mode search refused: " + std::to_string(eligible) +
                        " twin classes exceed the class cap of " + std::to_string(opt.class_cap));
    if (k > 64) throw CapExceeded("class-mode search refused: more than 64 twin classes");
  }
}

}  // namespace

CyclicCutResult cyclic_vertex_connectivity(const PowerGraph& g, const SearchOptions& opt) {
  CyclicCutResult out;
  out.exhaustion_bound = std::max<i64>(0, g.n - 6);
  if (g.n < 7) {  // two disjoint cycles plus a nonempty cutset need >= 7 vertices
    out.value = ConnectivityValue::inf();
    return out;
  }

  Best best;
  std::vector<int> cut_vertices;
  if (opt.mode == SearchMode::VertexOracle) {
    check_caps(g, opt, nullptr);
    auto ctx = make_vertex_ctx(g);
    best = vertex_mode_search(ctx, opt.policy, nullptr);
    if (best.found)
      for (int v = 0; v < g.n; ++v)
        if (best.cut_mask >> v & 1) cut_vertices.push_back(v);
  } else {
    auto q = twin_partition(g);
    check_caps(g, opt, &q);
    auto ctx = make_class_ctx(g, q);
    best = class_mode_search(ctx, opt.policy, nullptr);
    if (best.found)
      for (int a = 0; a < q.count(); ++a)
        if (best.cut_mask >> a & 1)
          cut_vertices.insert(cut_vertices.end(), q.classes[a].members.begin(),
                              q.classes[a].members.end());
  }

  if (!best.found) {
    out.value = ConnectivityValue::inf();
    return out;
  }
  out.value = ConnectivityValue::finite(best.size);
  auto w = classify_cutset(g, std::move(cut_vertices), true);
  if (!w.is_cyclic || static_cast<i64>(w.vertices.size()) != best.size)
    throw std::logic_error("cyclic search produced an invalid witness");
  out.witness = std::move(w);
  return out;
}

bool is_cyclically_separable_graph(const PowerGraph& g, const SearchOptions& opt) {
  if (g.n < 7) return false;
  std::atomic<bool> stop{false};
  if (opt.mode == SearchMode::VertexOracle) {
    check_caps(g, opt, nullptr);
    auto ctx = make_vertex_ctx(g);
    return vertex_mode_search(ctx, opt.policy, &stop).found;
  }
  auto q = twin_partition(g);
  check_caps(g, opt, &q);
  auto ctx = make_class_ctx(g, q);
  return class_mode_search(ctx, opt.policy, &stop).found;
}

std::optional<CutsetWitness> bounded_cyclic_cutset(const PowerGraph& g, i64 max_size, i64 budget) {
  auto universal = universal_vertices(g);
  if (static_cast<i64>(universal.size()) > max_size) return std::nullopt;

  std::vector<int> rest;
  {
    std::vector<char> is_universal(g.n, 0);
    for (int v : universal) is_universal[v] = 1;
    for (int v = 0; v < g.n; ++v)
      if (!is_universal[v]) rest.push_back(v);
  }

  i64 spent = 0;
  const int m = static_cast<int>(rest.size());
  for (i64 extra = 0; extra + static_cast<i64>(universal.size()) <= max_size && extra <= m;
       ++extra) {
    std::vector<int> idx(extra);
    for (i64 i = 0; i < extra; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
      if (++spent > budget)
        throw CapExceeded("bounded cyclic-cutset scan exceeded its candidate budget");
      std::vector<int> s = universal;
      for (int i : idx) s.push_back(rest[i]);
      if (is_cyclic_cutset(g, s)) return classify_cutset(g, std::move(s), true);
      // next lexicographic combination
      int pos = static_cast<int>(extra) - 1;
      while (pos >= 0 && idx[pos] == m - static_cast<int>(extra) + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < extra; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace pgc
