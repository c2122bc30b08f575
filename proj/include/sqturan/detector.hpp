#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqturan/graph.hpp"

namespace sqturan {

/// Host vertices u_0..u_{ell-1} such that u_i is adjacent to u_{i+1} and
/// u_{i+2} (indices mod ell): a copy of C_ell^2 as a subgraph.
struct SquaredCycleEmbedding {
  int ell = 0;
  std::vector<int> ordering;
};

struct DetectorOptions {
  std::int64_t node_limit = 100'000'000;
  int threads = 1;
  /// Reachability lookahead on (previous, current) pairs; auto-enabled when
  /// the searchable vertex pool exceeds this size.
  int lookahead_min_pool = 13;
};

struct DetectResult {
  std::optional<SquaredCycleEmbedding> embedding;
  std::int64_t nodes = 0;
};

/// Exhaustive search for C_ell^2 in g. A budget overrun throws BudgetExceeded
/// (the answer is then unknown). Hosts with fewer than ell vertices trivially
/// return no embedding.
DetectResult find_squared_cycle(const Graph& g, int ell, const DetectorOptions& options = {});

/// Same, restricted to copies that use vertex v.
DetectResult find_squared_cycle_through_vertex(const Graph& g, int ell, int v, const DetectorOptions& options = {});

/// Same, restricted to copies that use the edge uv (which must be present).
DetectResult find_squared_cycle_through_edge(const Graph& g, int ell, int u, int v,
                                             const DetectorOptions& options = {});

inline std::optional<SquaredCycleEmbedding> contains_squared_cycle(const Graph& g, int ell,
                                                                   const DetectorOptions& options = {}) {
  return find_squared_cycle(g, ell, options).embedding;
}

struct EmbeddingCheck {
  bool ok = false;
  /// First required pair (by position) that is not an edge of the host.
  std::optional<Edge> missing;
};

/// Checks all 2*ell required adjacencies. Throws ParameterError on a
/// repeated or out-of-range vertex or a length mismatch.
EmbeddingCheck verify_embedding(const Graph& g, const SquaredCycleEmbedding& embedding);

/// Generic backtracking subgraph-monomorphism test used as a cross-check
/// (host and pattern with at most 16 vertices).
bool generic_subgraph_oracle(const Graph& host, const Graph& pattern, std::int64_t node_limit = 200'000'000);

// ---------------------------------------------------------------------------
// Hand-built witness cycles

/// Structural situations in which a squared (3k+2)-cycle is assembled from
/// vertices of a near-balanced 3-partition with a few internal edges.
enum class WitnessCycle {
  TwoEdgesOnePart,        // two disjoint internal edges inside one part
  TwoHeavySamePart,       // two high internal-degree vertices in one part
  HeavyPairCommonMiddle,  // heavy vertices in parts 1 and 3, many common neighbors in part 2
  HeavyPairSparseMiddle,  // heavy vertices in parts 1 and 3, few common neighbors in part 2
  HeavyPlusEdgeSamePart,  // heavy vertex and a second internal edge in the same part
  EdgesInTwoParts,        // internal edges inside parts 1 and 3
};

struct NamedGraph {
  Graph graph;
  std::vector<std::string> names;

  /// Vertex id for a name; throws ParameterError if absent.
  int id(std::string_view name) const;
};

/// Vertex names in cyclic order, 3k + 2 of them (k >= 2). Names look like
/// "u*1.1", "u2.1", "v3.2": prefix, part digit, index.
std::vector<std::string> witness_cycle(WitnessCycle kind, int k);

/// Part index (1..3) encoded in a witness vertex name.
int witness_part(std::string_view name);

/// The adjacencies the construction relies on: every pair of named vertices
/// in different parts, plus the internal edges the situation assumes.
NamedGraph witness_host(WitnessCycle kind, int k);

/// The 8-vertex subgraphs drawn for k = 2 (figure = 1, 2, 3), built from the
/// drawn edge list with the drawn labels.
NamedGraph figure_host(int figure);

/// Maps a name sequence onto host ids.
SquaredCycleEmbedding embedding_from_names(const NamedGraph& host, const std::vector<std::string>& names);

}  // namespace sqturan
