#include "pgc/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

namespace pgc {

namespace {

std::vector<u64> as_mask(int n, const std::vector<int>& verts) {
  std::vector<u64> m((n + 63) / 64, 0);
  for (int v : verts) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex set: id out of range");
    m[v >> 6] |= u64(1) << (v & 63);
  }
  return m;
}

bool test_bit(const std::vector<u64>& m, int v) { return m[v >> 6] >> (v & 63) & 1; }

// components of the subgraph induced on `alive`
std::vector<std::vector<int>> components_within(const PowerGraph& g, const std::vector<u64>& alive) {
  const int words = g.row_words;
  std::vector<u64> seen(words, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.n; ++s) {
    if (!test_bit(alive, s) || test_bit(seen, s)) continue;
    std::vector<u64> comp(words, 0);
    comp[s >> 6] |= u64(1) << (s & 63);
    std::vector<int> stack{s}, verts{s};
    seen[s >> 6] |= u64(1) << (s & 63);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      const u64* r = g.row(u);
      for (int w = 0; w < words; ++w) {
        u64 fresh = r[w] & alive[w] & ~seen[w];
        while (fresh) {
          int v = w * 64 + std::countr_zero(fresh);
          fresh &= fresh - 1;
          seen[w] |= u64(1) << (v & 63);
          stack.push_back(v);
          verts.push_back(v);
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    comps.push_back(std::move(verts));
  }
  return comps;
}

std::vector<u64> full_mask(const PowerGraph& g) {
  std::vector<u64> m(g.row_words, 0);
  for (int v = 0; v < g.n; ++v) m[v >> 6] |= u64(1) << (v & 63);
  return m;
}

i64 edges_within(const PowerGraph& g, const std::vector<int>& verts) {
  auto m = as_mask(g.n, verts);
  i64 twice = 0;
  for (int v : verts) {
    const u64* r = g.row(v);
    for (int w = 0; w < g.row_words; ++w) twice += std::popcount(r[w] & m[w]);
  }
  return twice / 2;
}

}  // namespace

std::vector<std::vector<int>> components(const PowerGraph& g) {
  return components_within(g, full_mask(g));
}

bool has_cycle(const PowerGraph& g, const std::vector<int>& component) {
  if (component.empty()) throw std::invalid_argument("has_cycle: empty vertex set");
  auto m = as_mask(g.n, component);
  auto comps = components_within(g, m);
  if (comps.size() != 1)
    throw std::invalid_argument("has_cycle: vertex set is not connected");
  return edges_within(g, component) >= static_cast<i64>(component.size());
}

bool is_cutset(const PowerGraph& g, const std::vector<int>& s) {
  auto removed = as_mask(g.n, s);
  auto alive = full_mask(g);
  for (int w = 0; w < g.row_words; ++w) alive[w] &= ~removed[w];
  return components_within(g, alive).size() >= 2;
}

bool is_cyclic_cutset(const PowerGraph& g, const std::vector<int>& s) {
  auto removed = as_mask(g.n, s);
  auto alive = full_mask(g);
  for (int w = 0; w < g.row_words; ++w) alive[w] &= ~removed[w];
  auto comps = components_within(g, alive);
  if (comps.size() < 2) return false;
  int cyclic = 0;
  for (const auto& c : comps)
    if (edges_within(g, c) >= static_cast<i64>(c.size()) && ++cyclic >= 2) return true;
  return false;
}

bool is_minimal_cutset(const PowerGraph& g, const std::vector<int>& s) {
  auto removed = as_mask(g.n, s);
  auto alive = full_mask(g);
  for (int w = 0; w < g.row_words; ++w) alive[w] &= ~removed[w];
  auto comps = components_within(g, alive);
  if (comps.size() < 2) throw std::invalid_argument("is_minimal_cutset: S is not a cutset");

  int full = 0;
  for (const auto& c : comps) {
    auto cm = as_mask(g.n, c);
    bool all_see_it = true;
    for (int v : s) {
      const u64* r = g.row(v);
      bool sees = false;
      for (int w = 0; w < g.row_words && !sees; ++w) sees = (r[w] & cm[w]) != 0;
      if (!sees) {
        all_see_it = false;
        break;
      }
    }
    if (all_see_it && ++full >= 2) return true;
  }
  return false;
}

CutsetWitness classify_cutset(const PowerGraph& g, std::vector<int> vertices, bool is_minimum) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  CutsetWitness w;
  w.vertices = vertices;
  for (int v : vertices) w.element_codes.push_back(g.label[v]);
  std::sort(w.element_codes.begin(), w.element_codes.end());

  auto removed = as_mask(g.n, vertices);
  auto alive = full_mask(g);
  for (int i = 0; i < g.row_words; ++i) alive[i] &= ~removed[i];
  auto comps = components_within(g, alive);

  int cyclic = 0;
  for (const auto& c : comps) {
    ComponentSummary cs;
    cs.size = static_cast<int>(c.size());
    cs.edges = edges_within(g, c);
    cs.has_cycle = cs.edges >= cs.size;
    cyclic += cs.has_cycle;
    w.census.push_back(cs);
  }
  w.is_cutset = comps.size() >= 2;
  w.is_cyclic = w.is_cutset && cyclic >= 2;
  w.is_minimal = w.is_cutset && is_minimal_cutset(g, vertices);
  w.is_minimum = is_minimum;
  return w;
}

// ---------------------------------------------------------------------------
// vertex connectivity: vertex-split unit-capacity max flow (Dinic)
// ---------------------------------------------------------------------------

namespace {

struct Dinic {
  struct Arc {
    int to, rev;
    int cap;
  };
  std::vector<std::vector<Arc>> adj;
  std::vector<int> level, it;

  explicit Dinic(int n) : adj(n), level(n), it(n) {}

  void add_arc(int a, int b, int cap) {
    adj[a].push_back({b, static_cast<int>(adj[b].size()), cap});
    adj[b].push_back({a, static_cast<int>(adj[a].size()) - 1, 0});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : adj[u])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          q.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  int dfs(int u, int t, int f) {
    if (u == t) return f;
    for (int& i = it[u]; i < static_cast<int>(adj[u].size()); ++i) {
      Arc& a = adj[u][i];
      if (a.cap > 0 && level[a.to] == level[u] + 1) {
        int got = dfs(a.to, t, std::min(f, a.cap));
        if (got > 0) {
          a.cap -= got;
          adj[a.to][a.rev].cap += got;
          return got;
        }
      }
    }
    return 0;
  }

  int max_flow(int s, int t, int stop_at) {
    int flow = 0;
    while (flow < stop_at && bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      while (int f = dfs(s, t, std::numeric_limits<int>::max())) {
        flow += f;
        if (flow >= stop_at) break;
      }
    }
    return flow;
  }
};

constexpr int kInfCap = 1 << 28;

// Number of vertex-disjoint s-t paths; optionally extracts the minimum vertex
// cut closest to s (unique given the split-graph construction).
int vertex_flow(const PowerGraph& g, int s, int t, int stop_at, std::vector<int>* cut) {
  // vertex v -> in node 2v, out node 2v+1
  Dinic d(2 * g.n);
  for (int v = 0; v < g.n; ++v) d.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? kInfCap : 1);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.neighbors(u)) {
      d.add_arc(2 * u + 1, 2 * v, kInfCap);
    }
  int flow = d.max_flow(2 * s + 1, 2 * t, stop_at);
  if (cut) {
    cut->clear();
    // residual-reachable side from the source
    std::vector<char> seen(2 * g.n, 0);
    std::vector<int> stack{2 * s + 1};
    seen[2 * s + 1] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const Dinic::Arc& a : d.adj[u])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    for (int v = 0; v < g.n; ++v)
      if (seen[2 * v] && !seen[2 * v + 1]) cut->push_back(v);
  }
  return flow;
}

bool is_complete(const PowerGraph& g) {
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != g.n - 1) return false;
  return true;
}

}  // namespace

KappaResult vertex_connectivity(const PowerGraph& g) {
  if (g.n == 0) return {ConnectivityValue::finite(0), std::nullopt};
  if (is_complete(g)) return {ConnectivityValue::finite(g.n - 1), std::nullopt};

  auto [reduced, universal] = reduced_graph(g);
  // a vertex universal in the reduced graph would be universal in g
  if (components(reduced).size() >= 2) {
    auto w = classify_cutset(g, universal, true);
    return {ConnectivityValue::finite(static_cast<i64>(universal.size())), std::move(w)};
  }

  // candidate source: a minimum-degree vertex of the reduced graph
  int s0 = 0;
  for (int v = 1; v < reduced.n; ++v)
    if (reduced.degree(v) < reduced.degree(s0)) s0 = v;

  std::vector<std::pair<int, int>> pairs;
  for (int t = 0; t < reduced.n; ++t)
    if (t != s0 && !reduced.adjacent(s0, t)) pairs.emplace_back(s0, t);
  auto nbr = reduced.neighbors(s0);
  for (std::size_t i = 0; i < nbr.size(); ++i)
    for (std::size_t j = i + 1; j < nbr.size(); ++j)
      if (!reduced.adjacent(nbr[i], nbr[j])) pairs.emplace_back(nbr[i], nbr[j]);

  int best = reduced.n;  // any flow is < reduced.n
  std::vector<int> best_cut;
  for (auto [s, t] : pairs) {
    std::vector<int> cut;
    int f = vertex_flow(reduced, s, t, best, &cut);
    if (f < best) {
      best = f;
      best_cut = std::move(cut);
    }
  }

  std::vector<int> witness = universal;
  // map reduced ids back to parent ids via labels: reduced kept parent labels,
  // and parent labels are unique, so invert through a label->id table
  {
    int max_label = 0;
    for (int v = 0; v < g.n; ++v) max_label = std::max(max_label, g.label[v]);
    std::vector<int> where(max_label + 1, -1);
    for (int v = 0; v < g.n; ++v) where[g.label[v]] = v;
    for (int v : best_cut) witness.push_back(where[reduced.label[v]]);
  }
  i64 kappa = static_cast<i64>(universal.size()) + best;
  auto w = classify_cutset(g, std::move(witness), true);
  return {ConnectivityValue::finite(kappa), std::move(w)};
}

}  // namespace pgc
