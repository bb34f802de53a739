#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pgc/powergraph.hpp"

namespace pgc {

// Finite value or the distinguished infinity produced by cyclic-connectivity
// queries on graphs without a cyclic cutset.
struct ConnectivityValue {
  bool infinite = false;
  i64 value = 0;

  static ConnectivityValue inf() { return {true, 0}; }
  static ConnectivityValue finite(i64 v) { return {false, v}; }
  friend bool operator==(const ConnectivityValue&, const ConnectivityValue&) = default;
};

struct ComponentSummary {
  int size = 0;
  i64 edges = 0;
  bool has_cycle = false;
};

struct CutsetWitness {
  std::vector<int> vertices;       // sorted vertex ids of the queried graph
  std::vector<int> element_codes;  // sorted labels (equal to vertices for built graphs)
  bool is_cutset = false;
  bool is_minimal = false;
  bool is_minimum = false;  // for the queried kind of cutset
  bool is_cyclic = false;
  std::vector<ComponentSummary> census;  // components of g - S
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::vector<int>> components(const PowerGraph& g);

// component must be a connected vertex set of g; a connected graph has a cycle
// iff it has at least as many edges as vertices.
bool has_cycle(const PowerGraph& g, const std::vector<int>& component);

bool is_cutset(const PowerGraph& g, const std::vector<int>& s);
bool is_cyclic_cutset(const PowerGraph& g, const std::vector<int>& s);

// Full-component criterion: at least two components of g - S in which every
// vertex of S has a neighbor. Throws if S is not a cutset.
bool is_minimal_cutset(const PowerGraph& g, const std::vector<int>& s);

// Re-derives every witness flag from the vertex set and the graph.
CutsetWitness classify_cutset(const PowerGraph& g, std::vector<int> vertices, bool is_minimum);

struct KappaResult {
  ConnectivityValue value;
  std::optional<CutsetWitness> witness;  // absent for complete graphs
};

// Minimum vertex cuts by vertex-split unit-capacity maximum flow over
// sufficient source/sink pairs; complete graphs yield |V|-1 with no witness.
KappaResult vertex_connectivity(const PowerGraph& g);

enum class SearchMode { ClassQuotient, VertexOracle };
enum class ExecPolicy { Serial, Parallel };

struct SearchOptions {
  SearchMode mode = SearchMode::ClassQuotient;
  int oracle_cap = 40;   // vertex-mode graph size limit (hard ceiling 64)
  int class_cap = 24;    // class-mode limit on search-eligible twin classes
  int vertex_cap = 300;  // class-mode graph size limit
  ExecPolicy policy = ExecPolicy::Parallel;
};

struct CyclicCutResult {
  ConnectivityValue value;  // infinite means the search space was exhausted
  std::optional<CutsetWitness> witness;
  i64 exhaustion_bound = 0;  // cyclic cutsets can never exceed |V| - 6
};

CyclicCutResult cyclic_vertex_connectivity(const PowerGraph& g, const SearchOptions& opt = {});

// Early exit on the first cyclic cutset found.
bool is_cyclically_separable_graph(const PowerGraph& g, const SearchOptions& opt = {});

// Plain increasing-cardinality enumeration over vertex subsets containing the
// universal vertices, up to total size max_size. First hit is the minimum-size,
// lexicographically least cyclic cutset of that size range; nullopt means no
// cyclic cutset of size <= max_size exists. Intended for small max_size only.
std::optional<CutsetWitness> bounded_cyclic_cutset(const PowerGraph& g, i64 max_size,
                                                   i64 budget = 50'000'000);

}  // namespace pgc
