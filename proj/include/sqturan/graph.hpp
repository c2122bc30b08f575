#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sqturan/vertex_set.hpp"

namespace sqturan {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Values are immutable once built; derived graphs are produced by the free
/// functions below or through GraphBuilder. Rows are symmetric and
/// irreflexive by construction.
class Graph {
 public:
  Graph() = default;

  static Graph edgeless(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  VertexSet vertices() const { return VertexSet::prefix(n_); }

  std::int64_t edge_count() const;
  int min_degree() const;
  int max_degree() const;
  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Throws InternalCheckError if symmetry or irreflexivity fails.
  void check_invariants() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const { return g_.n_; }
  bool has_edge(int u, int v) const { return g_.adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return g_.adj_[v]; }

  /// Adding an existing edge is a no-op; loops are rejected.
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  /// Makes v adjacent to every vertex of s.
  GraphBuilder& connect(int v, const VertexSet& s);

  Graph build() const;

 private:
  void check_vertex(int v) const;

  Graph g_;
};

/// Checks 1 <= n <= kMaxVertices, throwing ParameterError otherwise.
void check_order(std::int64_t n, const char* what);

// ---------------------------------------------------------------------------
// Families

struct GraphFamily;
using FamilyPtr = std::shared_ptr<const GraphFamily>;

struct CycleFamily {
  int length;
};
struct PathFamily {
  int length;
};
struct PowerFamily {
  FamilyPtr base;
  int k;
};
struct TuranFamily {
  int n;
  int r;
};
struct MultipartiteFamily {
  std::vector<int> parts;
};
struct JoinFamily {
  FamilyPtr left;
  FamilyPtr right;
};
/// K_1 + T_{n-1,3}.
struct ApexTuranFamily {
  int n;
};

struct GraphFamily {
  std::variant<CycleFamily, PathFamily, PowerFamily, TuranFamily, MultipartiteFamily, JoinFamily,
               ApexTuranFamily>
      kind;

  static FamilyPtr cycle(int length);
  static FamilyPtr path(int length);
  static FamilyPtr power(FamilyPtr base, int k);
  static FamilyPtr turan(int n, int r);
  static FamilyPtr multipartite(std::vector<int> parts);
  static FamilyPtr join(FamilyPtr left, FamilyPtr right);
  static FamilyPtr gn(int n);

  std::string describe() const;
};

/// Builds the named graph with its canonical labeling:
/// cycles and paths in traversal order; multipartite graphs part-major
/// (Turán parts by decreasing size); joins place the left operand first.
Graph build(const GraphFamily& spec);

Graph cycle_graph(int length);
Graph path_graph(int length);
Graph complete_graph(int n);
/// Joins every pair at distance at most k.
Graph graph_power(const Graph& g, int k);
Graph squared_cycle(int length);
Graph squared_path(int length);
Graph turan_graph(int n, int r);
Graph complete_multipartite(std::span<const int> parts);
Graph join(const Graph& left, const Graph& right);
Graph gn_graph(int n);

/// Part sizes of T_{n,r}, largest first.
std::vector<int> turan_part_sizes(int n, int r);
std::int64_t turan_edge_count(int n, int r);
/// floor((n-1)^2 / 3) + (n - 1).
std::int64_t gn_edge_count(int n);

// ---------------------------------------------------------------------------
// Derived graphs

inline std::int64_t edge_count(const Graph& g) { return g.edge_count(); }

/// Subgraph induced by `vertices`, relabeled in increasing vertex order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Removes the listed edges; a missing edge is an error.
Graph delete_edges(const Graph& g, std::span<const Edge> edges);
/// Adds the listed edges; an existing edge is an error.
Graph add_edges(const Graph& g, std::span<const Edge> edges);
/// Removes v and shifts the labels above it down by one.
Graph delete_vertex(const Graph& g, int v);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Matching {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
};

/// Maximum matching via Edmonds' blossom algorithm.
Matching max_matching(const Graph& g);

}  // namespace sqturan
