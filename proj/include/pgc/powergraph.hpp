#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgc/groups.hpp"

namespace pgc {

// Dense undirected simple graph. Vertices are 0..n-1; label[] maps each vertex
// to its element code (identity map for graphs born from build()). Subgraphs
// keep the parent's labels so witnesses always serialize as element codes.
struct PowerGraph {
  int n = 0;
  std::optional<GroupSpec> origin;
  std::vector<int> label;
  int row_words = 0;
  std::vector<u64> bits;  // row-major packed adjacency matrix

  static PowerGraph empty(int n);
  static PowerGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  bool adjacent(int u, int v) const { return bits[u * (std::size_t)row_words + (v >> 6)] >> (v & 63) & 1; }
  void add_edge(int u, int v);
  const u64* row(int u) const { return bits.data() + u * (std::size_t)row_words; }
  int degree(int u) const;
  i64 edge_count() const;
  std::vector<int> neighbors(int u) const;
};

PowerGraph build(const GroupSpec& spec);

std::vector<int> universal_vertices(const PowerGraph& g);

// Subgraph on the complement of `verts`; vertex ids are renumbered, labels kept.
PowerGraph remove_vertices(const PowerGraph& g, const std::vector<int>& verts);

// g minus its universal vertices, plus the removed vertex set.
std::pair<PowerGraph, std::vector<int>> reduced_graph(const PowerGraph& g);

// Plain-text dump: "<vertex-count> <edge-count>" then one "u v" line per edge,
// u < v, ascending lexicographic.
std::string dump(const PowerGraph& g);

struct TwinClass {
  std::vector<int> members;  // sorted vertex ids
  bool is_clique = true;     // classes are cliques or independent sets; size-1 counts as clique
};

// Quotient by the twin relation (equal neighborhoods ignoring the pair itself,
// closed or open). Classes are ordered by smallest member.
struct TwinClassGraph {
  std::vector<TwinClass> classes;
  std::vector<int> class_of;
  int row_words = 0;
  std::vector<u64> bits;

  int count() const { return static_cast<int>(classes.size()); }
  bool adjacent(int a, int b) const { return bits[a * (std::size_t)row_words + (b >> 6)] >> (b & 63) & 1; }
};

TwinClassGraph twin_partition(const PowerGraph& g);

}  // namespace pgc
