#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqturan/detector.hpp"
#include "sqturan/graph.hpp"

namespace sqturan {

enum class Objective { edges, spectral };

std::string to_string(Objective o);
Objective parse_objective(const std::string& s);

/// Position of a best value relative to the same quantity for G(n).
enum class GnComparison { matches_Gn, exceeds_Gn, below_Gn };

std::string to_string(GnComparison c);

struct SearchReport {
  int ell = 0;
  int n = 0;
  Objective objective = Objective::edges;
  double best_value = 0.0;
  /// Canonical graph6 strings (n <= 12) of every optimizer for the edge
  /// objective; the single optimizer for the spectral objective. Sorted.
  std::vector<std::string> witnesses;
  std::int64_t graphs_enumerated = 0;
  bool exhaustive = false;
  std::vector<std::int64_t> level_counts;  // free graphs per order 1..n (exhaustive)
  std::int64_t nodes = 0;                  // children examined / moves attempted
  std::optional<double> gn_value;          // e(G(n)) or rho(G(n)); absent for n < 4
  std::optional<GnComparison> gn_comparison;
  std::uint64_t seed = 0;
  std::string method;                      // "exhaustive" or "hillclimb"
  std::vector<std::string> notes;
};

struct ExhaustiveOptions {
  std::int64_t node_limit = 200'000'000;  // children examined
  int threads = 1;
  double spectral_tol = 1e-10;
  /// Every prune_audit_period-th prune decision is re-checked with the
  /// generic oracle (0 disables).
  int prune_audit_period = 100;
};

/// Isomorph-free enumeration of the C_ell^2-free graphs on n <= 10 vertices
/// by canonical vertex augmentation. A budget overrun returns a partial
/// report with exhaustive = false.
SearchReport exhaustive_extremal(int ell, int n, Objective objective, const ExhaustiveOptions& options = {});

struct HillclimbOptions {
  std::int64_t budget = 20'000;  // move attempts (each one a containment check)
  std::uint64_t seed = 0;
  int random_starts = 2;
  double spectral_tol = 1e-10;
  DetectorOptions detector;
};

/// Local search from G(n), T_{n,3} and seeded random free graphs using
/// edge additions, then 1-swaps once no addition keeps the graph free.
SearchReport hillclimb_extremal(int ell, int n, Objective objective, const HillclimbOptions& options = {});

struct ConsistencyRow {
  int ell = 0;
  int n = 0;
  std::optional<bool> gn_free;      // checked when ell = 2 mod 3
  std::optional<bool> turan3_free;  // checked when ell != 0 mod 3
  bool turan2_free = false;
  std::int64_t edges_turan3 = 0;
  std::int64_t edges_gn = 0;
  bool edges_turan3_below_gn = false;
  double rho_turan3 = 0.0;
  double rho_gn = 0.0;
  bool rho_turan3_below_gn = false;

  bool ok() const {
    return gn_free.value_or(true) && turan3_free.value_or(true) && turan2_free && edges_turan3_below_gn &&
           rho_turan3_below_gn;
  }
};

struct ConsistencyOptions {
  DetectorOptions detector;
  double spectral_tol = 1e-10;
};

/// One row per (ell, n) with n_min <= n <= n_max (n >= 4, n >= ell for the
/// freeness columns to be meaningful).
std::vector<ConsistencyRow> theorem_consistency(const std::vector<int>& ells, int n_min, int n_max,
                                                const ConsistencyOptions& options = {});

}  // namespace sqturan
