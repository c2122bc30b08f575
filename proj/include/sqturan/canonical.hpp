#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqturan/graph.hpp"

namespace sqturan {

struct CanonOptions {
  int max_order = 12;
  std::int64_t node_limit = 2'000'000;
};

struct CanonicalLabeling {
  /// position[v]: index of v in the canonical order.
  std::vector<int> position;
  /// graph6 string of g relabeled by position; equal iff isomorphic.
  std::string form;
  std::int64_t nodes = 0;
};

/// Minimum adjacency string over the leaves of an individualization and
/// refinement tree (twins and discovered root orbits pruned). With
/// `individualized`, v is fixed as a singleton first cell, so two vertices
/// get equal forms iff an automorphism maps one to the other.
CanonicalLabeling canonical_labeling(const Graph& g, std::optional<int> individualized = std::nullopt,
                                     const CanonOptions& options = {});

inline std::string canonical_form(const Graph& g, const CanonOptions& options = {}) {
  return canonical_labeling(g, std::nullopt, options).form;
}

/// Relabels g so that vertex v becomes position[v].
Graph relabel(const Graph& g, const std::vector<int>& position);

}  // namespace sqturan
