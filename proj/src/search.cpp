#include "sqturan/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "sqturan/canonical.hpp"
#include "sqturan/error.hpp"
#include "sqturan/graph_io.hpp"
#include "sqturan/spectral.hpp"

namespace sqturan {

std::string to_string(Objective o) { return o == Objective::edges ? "edges" : "spectral"; }

Objective parse_objective(const std::string& s) {
  if (s == "edges") return Objective::edges;
  if (s == "spectral") return Objective::spectral;
  throw ParameterError("objective must be 'edges' or 'spectral' (got '" + s + "')");
}

std::string to_string(GnComparison c) {
  switch (c) {
    case GnComparison::matches_Gn:
      return "matches_Gn";
    case GnComparison::exceeds_Gn:
      return "exceeds_Gn";
    case GnComparison::below_Gn:
      return "below_Gn";
  }
  return "";
}

namespace {

constexpr double kSpectralTie = 1e-8;

struct Candidate {
  double value = 0.0;
  std::int64_t edges = 0;
  std::string form;
};

/// True if a should replace b as the best spectral candidate.
bool spectral_better(const Candidate& a, const Candidate& b) {
  if (std::abs(a.value - b.value) > kSpectralTie) return a.value > b.value;
  if (a.edges != b.edges) return a.edges > b.edges;
  return a.form < b.form;
}

void compare_with_gn(SearchReport& r, double spectral_tol) {
  if (r.n < 4) return;
  const Graph gn = gn_graph(r.n);
  if (r.objective == Objective::edges) {
    r.gn_value = static_cast<double>(gn.edge_count());
    const auto best = std::llround(r.best_value);
    const auto target = gn.edge_count();
    r.gn_comparison = best == target ? GnComparison::matches_Gn
                      : best > target ? GnComparison::exceeds_Gn
                                      : GnComparison::below_Gn;
  } else {
    r.gn_value = spectral_radius(gn, {spectral_tol}).rho;
    const double d = r.best_value - *r.gn_value;
    r.gn_comparison = std::abs(d) <= kSpectralTie ? GnComparison::matches_Gn
                      : d > 0                     ? GnComparison::exceeds_Gn
                                                  : GnComparison::below_Gn;
  }
}

void verify_witnesses(const SearchReport& r) {
  for (const auto& w : r.witnesses) {
    const Graph g = from_graph6(w);
    if (find_squared_cycle(g, r.ell).embedding)
      throw InternalCheckError("witness " + w + " contains the forbidden squared cycle");
  }
}

// ---------------------------------------------------------------------------
// Canonical augmentation

using Invariant = std::vector<int>;  // degree, then sorted neighbor degrees

Invariant invariant(const Graph& g, int v) {
  Invariant inv{g.degree(v)};
  g.neighbors(v).for_each([&](int u) { inv.push_back(g.degree(u)); });
  std::sort(inv.begin() + 1, inv.end(), std::greater<>());
  return inv;
}

struct Child {
  Graph graph;
  std::string form;
};

struct FinalAccumulator {
  std::int64_t count = 0;
  std::int64_t best_edges = -1;
  std::set<std::string> edge_witnesses;
  std::optional<Candidate> spectral_best;

  void add(const Graph& g, const std::string& form, Objective objective, double tol) {
    ++count;
    const std::int64_t e = g.edge_count();
    if (objective == Objective::edges) {
      if (e > best_edges) {
        best_edges = e;
        edge_witnesses.clear();
      }
      if (e == best_edges) edge_witnesses.insert(form);
    } else {
      Candidate c{spectral_radius(g, {tol}).rho, e, form};
      if (!spectral_best || spectral_better(c, *spectral_best)) spectral_best = std::move(c);
    }
  }

  void merge(const FinalAccumulator& o, Objective objective) {
    count += o.count;
    if (objective == Objective::edges) {
      if (o.best_edges > best_edges) {
        best_edges = o.best_edges;
        edge_witnesses = o.edge_witnesses;
      } else if (o.best_edges == best_edges) {
        edge_witnesses.insert(o.edge_witnesses.begin(), o.edge_witnesses.end());
      }
    } else if (o.spectral_best && (!spectral_best || spectral_better(*o.spectral_best, *spectral_best))) {
      spectral_best = o.spectral_best;
    }
  }
};

class Augmenter {
 public:
  Augmenter(int ell, const ExhaustiveOptions& options) : ell_(ell), options_(options), pattern_(squared_cycle(ell)) {}

  /// Accepted children of parent p (order k) in mask order. Returns false
  /// when the node budget ran out.
  bool expand(const Graph& p, std::vector<Child>& out) {
    const int k = p.order();
    std::set<std::string> seen;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (nodes_.fetch_add(1, std::memory_order_relaxed) >= options_.node_limit) return false;
      GraphBuilder b(k + 1);
      for (auto [u, v] : p.edges()) b.add_edge(u, v);
      for (int v = 0; v < k; ++v)
        if (mask >> v & 1) b.add_edge(v, k);
      Graph c = b.build();

      // The new vertex must carry the largest invariant.
      std::vector<Invariant> inv(k + 1);
      for (int v = 0; v <= k; ++v) inv[v] = invariant(c, v);
      const Invariant& top = *std::max_element(inv.begin(), inv.end());
      if (inv[k] != top) continue;

      if (ell_ <= k + 1 && find_squared_cycle_through_vertex(c, ell_, k).embedding) {
        audit_prune(c);
        continue;
      }

      const CanonicalLabeling lab = canonical_labeling(c, std::nullopt, canon_);
      int m = -1;
      for (int v = 0; v <= k; ++v)
        if (inv[v] == top && (m < 0 || lab.position[v] < lab.position[m])) m = v;
      if (m != k && canonical_labeling(c, k, canon_).form != canonical_labeling(c, m, canon_).form) continue;
      if (!seen.insert(lab.form).second) continue;
      out.push_back({std::move(c), lab.form});
    }
    return true;
  }

  std::int64_t nodes() const { return std::min<std::int64_t>(nodes_.load(), options_.node_limit); }

 private:
  void audit_prune(const Graph& c) {
    if (options_.prune_audit_period <= 0) return;
    if (prunes_.fetch_add(1) % options_.prune_audit_period != 0) return;
    if (!generic_subgraph_oracle(c, pattern_))
      throw InternalCheckError("pruned graph " + to_graph6(c) + " does not contain the pattern");
  }

  int ell_;
  ExhaustiveOptions options_;
  Graph pattern_;
  CanonOptions canon_{16, 10'000'000};
  std::atomic<std::int64_t> nodes_{0};
  std::atomic<std::int64_t> prunes_{0};
};

/// Runs fn(i) for i in [0, count) over `threads` workers; the first
/// exception is rethrown.
template <typename Fn>
void parallel_for(int threads, std::size_t count, Fn fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

SearchReport exhaustive_extremal(int ell, int n, Objective objective, const ExhaustiveOptions& options) {
  if (ell < 3) throw ParameterError("ell must be >= 3 (ell=" + std::to_string(ell) + ")");
  if (n < 1 || n > 10) throw ParameterError("exhaustive search needs 1 <= n <= 10 (n=" + std::to_string(n) + ")");
  SearchReport r;
  r.ell = ell;
  r.n = n;
  r.objective = objective;
  r.method = "exhaustive";
  r.exhaustive = true;

  Augmenter aug(ell, options);
  const int threads = std::max(1, options.threads);
  std::vector<Graph> level{Graph::edgeless(1)};
  FinalAccumulator final_acc;
  if (n == 1) final_acc.add(level[0], to_graph6(level[0]), objective, options.spectral_tol);
  r.level_counts.push_back(1);

  for (int k = 1; k < n && r.exhaustive; ++k) {
    const bool last = k + 1 == n;
    std::vector<std::vector<Child>> children(level.size());
    std::vector<FinalAccumulator> accs(last ? level.size() : 0);
    std::vector<char> complete(level.size(), 1);
    parallel_for(threads, level.size(), [&](std::size_t i) {
      complete[i] = aug.expand(level[i], children[i]);
      if (last) {
        for (const auto& c : children[i]) accs[i].add(c.graph, c.form, objective, options.spectral_tol);
        children[i].clear();
      }
    });
    if (std::find(complete.begin(), complete.end(), 0) != complete.end()) r.exhaustive = false;

    std::int64_t count = 0;
    if (last) {
      for (const auto& a : accs) final_acc.merge(a, objective);
      count = final_acc.count;
    } else {
      std::vector<Graph> next;
      for (auto& cs : children)
        for (auto& c : cs) next.push_back(std::move(c.graph));
      count = static_cast<std::int64_t>(next.size());
      level = std::move(next);
    }
    r.level_counts.push_back(count);
  }

  r.nodes = aug.nodes();
  if (static_cast<int>(r.level_counts.size()) == n) {
    r.graphs_enumerated = r.level_counts.back();
    if (objective == Objective::edges) {
      r.best_value = static_cast<double>(final_acc.best_edges);
      r.witnesses.assign(final_acc.edge_witnesses.begin(), final_acc.edge_witnesses.end());
    } else if (final_acc.spectral_best) {
      r.best_value = final_acc.spectral_best->value;
      r.witnesses = {final_acc.spectral_best->form};
    }
  }
  if (!r.exhaustive) r.notes.push_back("node budget exhausted; counts and witnesses are partial");
  verify_witnesses(r);
  if (r.exhaustive) compare_with_gn(r, options.spectral_tol);
  return r;
}

// ---------------------------------------------------------------------------
// Hill climbing

namespace {

class Climber {
 public:
  Climber(int ell, Objective objective, const HillclimbOptions& options)
      : ell_(ell), objective_(objective), options_(options) {}

  bool budget_left() const { return attempts_ < options_.budget; }
  std::int64_t attempts() const { return attempts_; }

  bool free_after_adding(const Graph& g, int u, int v) {
    ++attempts_;
    return !find_squared_cycle_through_edge(g, ell_, u, v, options_.detector).embedding;
  }

  double value(const Graph& g) const {
    if (objective_ == Objective::edges) return static_cast<double>(g.edge_count());
    return spectral_radius(g, {options_.spectral_tol}).rho;
  }

  Graph random_start(int n, std::mt19937_64& rng) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(pairs.size() / 2);
    GraphBuilder b(n);
    for (auto [u, v] : pairs) {
      b.add_edge(u, v);
      if (ell_ <= n && !free_after_adding(b.build(), u, v)) b.remove_edge(u, v);
    }
    return b.build();
  }

  Graph climb(Graph g, std::mt19937_64& rng) {
    const int n = g.order();
    double current = value(g);
    while (budget_left()) {
      std::vector<Edge> non_edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!g.adjacent(u, v)) non_edges.emplace_back(u, v);
      if (non_edges.empty()) break;
      std::shuffle(non_edges.begin(), non_edges.end(), rng);

      bool improved = false;
      for (auto [u, v] : non_edges) {
        if (!budget_left()) break;
        Graph h = GraphBuilder(g).add_edge(u, v).build();
        if (!free_after_adding(h, u, v)) continue;
        const double val = value(h);
        if (val > current) {
          g = std::move(h);
          current = val;
          improved = true;
        }
      }
      if (improved) continue;
      if (!swap_step(g, current, non_edges, rng)) break;
    }
    return g;
  }

 private:
  // Removes one edge and adds one non-edge. For the edge objective the swap
  // must make room for a further addition; for the spectral objective it
  // must raise rho by more than the tie tolerance.
  bool swap_step(Graph& g, double& current, const std::vector<Edge>& non_edges, std::mt19937_64& rng) {
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto [a, b] : edges) {
      for (auto [u, v] : non_edges) {
        if (!budget_left()) return false;
        Graph h = GraphBuilder(g).remove_edge(a, b).add_edge(u, v).build();
        if (!free_after_adding(h, u, v)) continue;
        if (objective_ == Objective::spectral) {
          const double val = value(h);
          if (val > current + kSpectralTie) {
            g = std::move(h);
            current = val;
            return true;
          }
          continue;
        }
        for (auto [x, y] : non_edges) {
          if (!budget_left()) return false;
          if ((x == u && y == v) || (x == a && y == b) || h.adjacent(x, y)) continue;
          Graph h2 = GraphBuilder(h).add_edge(x, y).build();
          if (!free_after_adding(h2, x, y)) continue;
          g = std::move(h2);
          current = value(g);
          return true;
        }
      }
    }
    return false;
  }

  int ell_;
  Objective objective_;
  HillclimbOptions options_;
  std::int64_t attempts_ = 0;
};

std::string witness_form(const Graph& g) { return g.order() <= 12 ? canonical_form(g) : to_graph6(g); }

}  // namespace

SearchReport hillclimb_extremal(int ell, int n, Objective objective, const HillclimbOptions& options) {
  if (ell < 3) throw ParameterError("ell must be >= 3 (ell=" + std::to_string(ell) + ")");
  check_order(n, "hill-climb order");
  SearchReport r;
  r.ell = ell;
  r.n = n;
  r.objective = objective;
  r.method = "hillclimb";
  r.seed = options.seed;

  Climber climber(ell, objective, options);
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32)};
  std::mt19937_64 rng(seq);

  std::vector<std::pair<std::string, Graph>> starts;
  auto try_start = [&](const std::string& name, Graph g) {
    if (find_squared_cycle(g, ell, options.detector).embedding)
      r.notes.push_back("start " + name + " contains the pattern; skipped");
    else
      starts.emplace_back(name, std::move(g));
  };
  if (n >= 4) try_start("gn", gn_graph(n));
  if (n >= 3) try_start("turan3", turan_graph(n, 3));
  for (int i = 0; i < options.random_starts; ++i) starts.emplace_back("random" + std::to_string(i), climber.random_start(n, rng));

  std::optional<Candidate> best;
  for (auto& [name, g] : starts) {
    const Graph out = climber.climb(g, rng);
    Candidate c{climber.value(out), out.edge_count(), witness_form(out)};
    const bool better = !best || (objective == Objective::edges
                                      ? (c.value > best->value || (c.value == best->value && c.form < best->form))
                                      : spectral_better(c, *best));
    if (better) best = std::move(c);
  }
  r.nodes = climber.attempts();
  if (best) {
    r.best_value = best->value;
    r.witnesses = {best->form};
  }
  r.graphs_enumerated = static_cast<std::int64_t>(starts.size());
  if (!climber.budget_left()) r.notes.push_back("move budget exhausted");
  verify_witnesses(r);
  compare_with_gn(r, options.spectral_tol);
  return r;
}

// ---------------------------------------------------------------------------

std::vector<ConsistencyRow> theorem_consistency(const std::vector<int>& ells, int n_min, int n_max,
                                                const ConsistencyOptions& options) {
  if (n_min < 4 || n_max < n_min || n_max > kMaxVertices)
    throw ParameterError("theorem consistency needs 4 <= n_min <= n_max <= " + std::to_string(kMaxVertices));
  std::vector<ConsistencyRow> rows;
  const SpectralOptions so{options.spectral_tol};
  for (int ell : ells) {
    if (ell < 3) throw ParameterError("ell must be >= 3 (ell=" + std::to_string(ell) + ")");
    for (int n = n_min; n <= n_max; ++n) {
      ConsistencyRow row;
      row.ell = ell;
      row.n = n;
      const Graph gn = gn_graph(n);
      const Graph t3 = turan_graph(n, 3);
      const Graph t2 = turan_graph(n, 2);
      if (ell % 3 == 2) row.gn_free = !find_squared_cycle(gn, ell, options.detector).embedding;
      if (ell % 3 != 0) row.turan3_free = !find_squared_cycle(t3, ell, options.detector).embedding;
      row.turan2_free = !find_squared_cycle(t2, ell, options.detector).embedding;
      row.edges_turan3 = t3.edge_count();
      row.edges_gn = gn.edge_count();
      row.edges_turan3_below_gn = row.edges_turan3 < row.edges_gn;
      row.rho_turan3 = spectral_radius(t3, so).rho;
      row.rho_gn = spectral_radius(gn, so).rho;
      row.rho_turan3_below_gn = row.rho_turan3 < row.rho_gn;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace sqturan
