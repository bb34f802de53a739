#include "pgc/powergraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace pgc {

PowerGraph PowerGraph::empty(int n) {
  PowerGraph g;
  g.n = n;
  g.row_words = (n + 63) / 64;
  g.bits.assign(static_cast<std::size_t>(n) * g.row_words, 0);
  g.label.resize(n);
  std::iota(g.label.begin(), g.label.end(), 0);
  return g;
}

PowerGraph PowerGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  PowerGraph g = empty(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void PowerGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
  bits[u * (std::size_t)row_words + (v >> 6)] |= u64(1) << (v & 63);
  bits[v * (std::size_t)row_words + (u >> 6)] |= u64(1) << (u & 63);
}

int PowerGraph::degree(int u) const {
  int d = 0;
  const u64* r = row(u);
  for (int w = 0; w < row_words; ++w) d += std::popcount(r[w]);
  return d;
}

i64 PowerGraph::edge_count() const {
  i64 twice = 0;
  for (int u = 0; u < n; ++u) twice += degree(u);
  return twice / 2;
}

std::vector<int> PowerGraph::neighbors(int u) const {
  std::vector<int> out;
  const u64* r = row(u);
  for (int w = 0; w < row_words; ++w) {
    u64 word = r[w];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

PowerGraph build(const GroupSpec& spec) {
  const i64 order = group_order(spec);
  if (order > 5000)
    throw std::invalid_argument("build: group order " + std::to_string(order) +
                                " exceeds the dense-graph limit (5000)");
  const int n = static_cast<int>(order);
  PowerGraph g = PowerGraph::empty(n);
  g.origin = spec;

  // subgroup membership bitsets, one per element
  const int words = g.row_words;
  std::vector<u64> sub(static_cast<std::size_t>(n) * words, 0);
  for (int x = 0; x < n; ++x)
    for (int m : cyclic_subgroup(spec, x)) sub[x * (std::size_t)words + (m >> 6)] |= u64(1) << (m & 63);

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const bool adj = (sub[y * (std::size_t)words + (x >> 6)] >> (x & 63) & 1) ||
                       (sub[x * (std::size_t)words + (y >> 6)] >> (y & 63) & 1);
      if (adj) g.add_edge(x, y);
    }
  return g;
}

std::vector<int> universal_vertices(const PowerGraph& g) {
  std::vector<int> out;
  for (int u = 0; u < g.n; ++u)
    if (g.degree(u) == g.n - 1) out.push_back(u);
  return out;
}

PowerGraph remove_vertices(const PowerGraph& g, const std::vector<int>& verts) {
  std::vector<char> gone(g.n, 0);
  for (int v : verts) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("remove_vertices: vertex out of range");
    gone[v] = 1;
  }
  std::vector<int> keep;
  for (int u = 0; u < g.n; ++u)
    if (!gone[u]) keep.push_back(u);

  PowerGraph h = PowerGraph::empty(static_cast<int>(keep.size()));
  h.origin = g.origin;
  for (std::size_t i = 0; i < keep.size(); ++i) h.label[i] = g.label[keep[i]];
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

std::pair<PowerGraph, std::vector<int>> reduced_graph(const PowerGraph& g) {
  std::vector<int> removed = universal_vertices(g);
  return {remove_vertices(g, removed), std::move(removed)};
}

std::string dump(const PowerGraph& g) {
  std::string out = std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
  for (int u = 0; u < g.n; ++u)
    for (int v : g.neighbors(u))
      if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

TwinClassGraph twin_partition(const PowerGraph& g) {
  const int words = g.row_words;
  // u, v are twins iff their rows agree outside of {u, v}
  auto twins = [&](int u, int v) {
    const u64* ru = g.row(u);
    const u64* rv = g.row(v);
    for (int w = 0; w < words; ++w) {
      u64 diff = ru[w] ^ rv[w];
      if (w == (u >> 6)) diff &= ~(u64(1) << (u & 63));
      if (w == (v >> 6)) diff &= ~(u64(1) << (v & 63));
      if (diff) return false;
    }
    return true;
  };

  TwinClassGraph q;
  q.class_of.assign(g.n, -1);
  for (int u = 0; u < g.n; ++u) {
    if (q.class_of[u] >= 0) continue;
    const int id = q.count();
    TwinClass cls;
    cls.members.push_back(u);
    q.class_of[u] = id;
    for (int v = u + 1; v < g.n; ++v)
      if (q.class_of[v] < 0 && twins(u, v)) {
        cls.members.push_back(v);
        q.class_of[v] = id;
      }
    cls.is_clique = cls.members.size() < 2 || g.adjacent(cls.members[0], cls.members[1]);
    q.classes.push_back(std::move(cls));
  }

  const int k = q.count();
  q.row_words = (k + 63) / 64;
  q.bits.assign(static_cast<std::size_t>(k) * q.row_words, 0);
  auto set_adj = [&](int a, int b) {
    q.bits[a * (std::size_t)q.row_words + (b >> 6)] |= u64(1) << (b & 63);
    q.bits[b * (std::size_t)q.row_words + (a >> 6)] |= u64(1) << (a & 63);
  };
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.adjacent(q.classes[a].members[0], q.classes[b].members[0])) set_adj(a, b);
  return q;
}

}  // namespace pgc
