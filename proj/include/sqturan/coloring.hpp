#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sqturan/graph.hpp"

namespace sqturan {

enum class ColoringClaim { equals_chi, upper_bound };

struct ColoringCertificate {
  std::vector<int> colors;  // 0-based color per vertex
  int num_colors = 0;
  ColoringClaim claim = ColoringClaim::upper_bound;

  /// Throws InternalCheckError unless the coloring is proper on g and uses
  /// exactly the colors 0..num_colors-1.
  void validate(const Graph& g) const;
};

/// Partition of V(G) into independent sets.
struct GoodPartition {
  std::vector<std::vector<int>> parts;

  /// Parts sorted internally and ordered by minimum vertex; the quotient
  /// of a coloring by label permutations.
  GoodPartition canonical() const;
  /// Throws InternalCheckError unless the parts cover V(g) exactly once and
  /// each part is independent in g.
  void validate(const Graph& g) const;
  std::vector<int> to_colors(int n) const;

  friend bool operator==(const GoodPartition&, const GoodPartition&) = default;
};

bool is_proper_coloring(const Graph& g, std::span<const int> colors);
GoodPartition partition_from_colors(std::span<const int> colors);

struct ChromaticOptions {
  std::int64_t node_limit = 50'000'000;
};

struct ChromaticResult {
  int chi = 0;
  ColoringCertificate certificate;
  int clique_lower_bound = 0;
  std::int64_t nodes = 0;
};

/// Exact chromatic number for n <= 64 by DSATUR branch and bound seeded
/// with a greedy clique. Throws BudgetExceeded past the node limit.
ChromaticResult chromatic_number(const Graph& g, const ChromaticOptions& options = {});

/// Residue classes of P_ell^2: part i (i = 1, 2, 3) holds v_j with j = i mod 3,
/// where v_j is vertex j - 1.
GoodPartition residue_partition_path(int ell);

/// Explicit coloring of C_ell^2 (ell >= 6): the residue partition when
/// 3 | ell; otherwise the four-part modification of the residue classes.
/// Parts are returned in construction order (V_1', V_2', ...).
GoodPartition explicit_cycle_partition(int ell);

/// An edge set whose removal makes C_ell^2 3-colorable, with the witness.
struct CriticalDeletion {
  std::vector<Edge> removed;
  GoodPartition partition;
};

/// ell = 1 mod 3: removes v_1 v_ell and reuses the residue classes.
/// ell = 2 mod 3: removes v_ell v_1 and v_3 v_4 and swaps v_1, v_2, v_3 across classes.
CriticalDeletion critical_deletion(int ell);

struct UniquenessResult {
  bool unique = false;
  std::int64_t colorings = 0;  // proper 3-colorings of P_ell^2 enumerated
  std::int64_t nodes = 0;
};

/// Enumerates every proper 3-coloring of P_ell^2 (4 <= ell <= 20) and checks
/// that each induces the residue partition up to relabeling.
UniquenessResult good_partition_uniqueness_check(int ell, std::int64_t node_limit = 10'000'000);

}  // namespace sqturan
