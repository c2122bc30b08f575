#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqturan/graph.hpp"
#include "sqturan/spectral.hpp"

namespace sqturan {

struct TriPartition {
  std::array<std::vector<int>, 3> parts;  // each sorted
  std::int64_t cross_edges = 0;
  std::int64_t internal_edges = 0;

  /// Builds from a per-vertex part index in {0, 1, 2}.
  static TriPartition from_assignment(const Graph& g, std::span<const int> part_of);
  std::vector<int> assignment(int n) const;
  /// Throws InternalCheckError unless the parts cover V(g) once and the
  /// edge counts add up to e(g).
  void validate(const Graph& g) const;
};

enum class MaxCutMode { exact, local };

struct MaxCutOptions {
  MaxCutMode mode = MaxCutMode::local;
  int restarts = 8;
  std::uint64_t seed = 0;
  int threads = 1;
  std::int64_t node_limit = 2'000'000'000;  // exact mode
};

struct MaxCutResult {
  TriPartition partition;
  std::uint64_t seed = 0;     // seed of the run
  int best_restart = -1;      // local mode: restart that produced the partition
  std::int64_t nodes = 0;     // exact mode: search nodes
};

/// Exact mode (n <= 15): global maximum of the cross edges by branch and
/// bound. Local mode: best of seeded restarts of strict single-vertex
/// moves; the result is asserted single-move optimal.
MaxCutResult max_cross_tripartition(const Graph& g, const MaxCutOptions& options = {});

/// True iff no vertex has fewer neighbors in another part than in its own.
bool single_move_optimal(const Graph& g, const TriPartition& p);

struct HeavySets {
  int lambda = 0;
  double threshold = 0.0;                      // 2^lambda * eta * n
  std::array<std::vector<int>, 3> per_part;    // W_i
  std::vector<int> all;                        // W
  std::array<std::vector<int>, 3> trimmed;     // V_i \ (W u S)
};

struct ProofSets {
  double eta = 0.0;
  double low_degree_threshold = 0.0;  // (2/3 - 6 eta) n
  std::vector<int> low_degree;        // S
  HeavySets w1;
  HeavySets w5;
};

/// Direct definition scan; requires 0 < eta < 1/6.
ProofSets compute_proof_sets(const Graph& g, const TriPartition& parts, double eta);

/// True iff every part size lies within eta n of n / 3.
bool partition_size_check(const TriPartition& parts, double eta);

struct LemmaReport {
  std::string id;
  bool holds = false;
  std::vector<std::pair<std::string, double>> quantities;
  std::vector<std::pair<std::string, double>> thresholds;
};

struct AuditOptions {
  std::optional<int> k;  // cycle length is 3k + 2
  MaxCutOptions maxcut;  // exact mode is used automatically for n <= 15
  SpectralOptions spectral;
  double floor_slack = 1e-9;
};

struct AuditResult {
  TriPartition partition;
  ProofSets sets;
  std::array<int, 3> part_matching{};  // nu(G[V_i])
  double perron_floor = 0.0;
  int max_entry_vertex = 0;
  std::vector<LemmaReport> reports;
  std::vector<std::string> warnings;
};

/// Evaluates the structural conclusions about extremal graphs as truth
/// values on g.
AuditResult lemma_audit(const Graph& g, double eta, const AuditOptions& options = {});

/// Largest eta allowed for a given k: 1 / (9 (120k + 48)).
double eta_upper_bound(int k);

}  // namespace sqturan
