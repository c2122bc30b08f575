#include "sqturan/prooflab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "sqturan/error.hpp"

namespace sqturan {

TriPartition TriPartition::from_assignment(const Graph& g, std::span<const int> part_of) {
  if (static_cast<int>(part_of.size()) != g.order()) throw ParameterError("assignment size differs from n");
  TriPartition p;
  for (int v = 0; v < g.order(); ++v) {
    if (part_of[v] < 0 || part_of[v] > 2) throw ParameterError("part index outside {0,1,2}");
    p.parts[part_of[v]].push_back(v);
  }
  for (auto [u, v] : g.edges()) {
    if (part_of[u] == part_of[v])
      ++p.internal_edges;
    else
      ++p.cross_edges;
  }
  return p;
}

std::vector<int> TriPartition::assignment(int n) const {
  std::vector<int> a(n, -1);
  for (int i = 0; i < 3; ++i)
    for (int v : parts[i]) a.at(v) = i;
  return a;
}

void TriPartition::validate(const Graph& g) const {
  const auto a = assignment(g.order());
  if (std::find(a.begin(), a.end(), -1) != a.end()) throw InternalCheckError("tripartition misses a vertex");
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  if (static_cast<int>(total) != g.order()) throw InternalCheckError("tripartition repeats a vertex");
  const TriPartition again = from_assignment(g, a);
  if (again.cross_edges != cross_edges || again.internal_edges != internal_edges)
    throw InternalCheckError("tripartition edge counts are stale");
}

bool single_move_optimal(const Graph& g, const TriPartition& p) {
  std::array<VertexSet, 3> sets;
  for (int i = 0; i < 3; ++i)
    for (int v : p.parts[i]) sets[i].set(v);
  for (int i = 0; i < 3; ++i) {
    for (int v : p.parts[i]) {
      const int own = g.neighbors(v).intersection_count(sets[i]);
      for (int j = 0; j < 3; ++j)
        if (j != i && g.neighbors(v).intersection_count(sets[j]) < own) return false;
    }
  }
  return true;
}

namespace {

// Minimizes internal edges over assignments with part labels in order of
// first use (part k is opened only after parts 0..k-1).
class ExactMaxCut {
 public:
  ExactMaxCut(const Graph& g, std::int64_t node_limit) : g_(g), limit_(node_limit) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    part_of_.assign(g.order(), -1);
  }

  std::vector<int> solve() {
    best_ = g_.edge_count() + 1;
    rec(0, 0, 0);
    return best_assignment_;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  std::int64_t bound(int depth) const {
    std::int64_t b = 0;
    for (std::size_t i = depth; i < order_.size(); ++i) {
      const int v = order_[i];
      int m = g_.order();
      for (int p = 0; p < 3; ++p) m = std::min(m, g_.neighbors(v).intersection_count(sets_[p]));
      b += m;
    }
    return b;
  }

  void rec(int depth, int opened, std::int64_t internal) {
    if (++nodes_ > limit_) throw BudgetExceeded("exact max-cut exceeded its node limit", nodes_);
    if (internal + bound(depth) >= best_) return;
    if (depth == g_.order()) {
      best_ = internal;
      best_assignment_ = part_of_;
      return;
    }
    const int v = order_[depth];
    for (int p = 0; p < std::min(opened + 1, 3); ++p) {
      const int add = g_.neighbors(v).intersection_count(sets_[p]);
      part_of_[v] = p;
      sets_[p].set(v);
      rec(depth + 1, std::max(opened, p + 1), internal + add);
      sets_[p].reset(v);
      part_of_[v] = -1;
    }
  }

  const Graph& g_;
  std::int64_t limit_;
  std::int64_t nodes_ = 0;
  std::int64_t best_ = 0;
  std::vector<int> order_;
  std::vector<int> part_of_;
  std::vector<int> best_assignment_;
  std::array<VertexSet, 3> sets_;
};

std::vector<int> local_search(const Graph& g, std::uint64_t seed, int restart) {
  const int n = g.order();
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> part_of(n);
  std::array<VertexSet, 3> sets;
  for (int i = 0; i < n; ++i) {
    part_of[order[i]] = i % 3;
    sets[i % 3].set(order[i]);
  }
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < n; ++v) {
      const int i = part_of[v];
      int best = i;
      int best_deg = g.neighbors(v).intersection_count(sets[i]);
      for (int j = 0; j < 3; ++j) {
        const int d = g.neighbors(v).intersection_count(sets[j]);
        if (d < best_deg) {
          best = j;
          best_deg = d;
        }
      }
      if (best != i) {
        sets[i].reset(v);
        sets[best].set(v);
        part_of[v] = best;
        moved = true;
      }
    }
  }
  return part_of;
}

}  // namespace

MaxCutResult max_cross_tripartition(const Graph& g, const MaxCutOptions& options) {
  MaxCutResult r;
  r.seed = options.seed;
  if (options.mode == MaxCutMode::exact) {
    if (g.order() > 15)
      throw ParameterError("exact max-cut limited to n <= 15 (n=" + std::to_string(g.order()) + ")");
    ExactMaxCut solver(g, options.node_limit);
    const auto a = solver.solve();
    r.partition = TriPartition::from_assignment(g, a);
    r.nodes = solver.nodes();
    r.partition.validate(g);
    return r;
  }

  if (options.restarts < 1) throw ParameterError("local max-cut needs at least one restart");
  std::vector<TriPartition> runs(options.restarts);
  auto run = [&](int i) { runs[i] = TriPartition::from_assignment(g, local_search(g, options.seed, i)); };
  const int threads = std::clamp(options.threads, 1, options.restarts);
  if (threads == 1) {
    for (int i = 0; i < options.restarts; ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (int i = t; i < options.restarts; i += threads) run(i);
      });
    for (auto& t : pool) t.join();
  }
  // Best cross count, then lowest restart index.
  int best = 0;
  for (int i = 1; i < options.restarts; ++i)
    if (runs[i].cross_edges > runs[best].cross_edges) best = i;
  r.partition = std::move(runs[best]);
  r.best_restart = best;
  r.partition.validate(g);
  if (!single_move_optimal(g, r.partition))
    throw InternalCheckError("local max-cut output is not single-move optimal");
  return r;
}

namespace {

HeavySets heavy_sets(const Graph& g, const TriPartition& p, double eta, int lambda) {
  HeavySets w;
  w.lambda = lambda;
  w.threshold = std::ldexp(eta, lambda) * g.order();
  for (int i = 0; i < 3; ++i) {
    VertexSet part;
    for (int v : p.parts[i]) part.set(v);
    for (int v : p.parts[i])
      if (g.neighbors(v).intersection_count(part) >= w.threshold) w.per_part[i].push_back(v);
    w.all.insert(w.all.end(), w.per_part[i].begin(), w.per_part[i].end());
  }
  std::sort(w.all.begin(), w.all.end());
  return w;
}

int matching_number(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) return 0;
  return max_matching(induced_subgraph(g, vertices)).size();
}

void trim(HeavySets& w, const TriPartition& p, const std::vector<int>& low) {
  for (int i = 0; i < 3; ++i) {
    for (int v : p.parts[i]) {
      if (std::binary_search(w.all.begin(), w.all.end(), v)) continue;
      if (std::binary_search(low.begin(), low.end(), v)) continue;
      w.trimmed[i].push_back(v);
    }
  }
}

}  // namespace

ProofSets compute_proof_sets(const Graph& g, const TriPartition& parts, double eta) {
  if (!(eta > 0.0 && eta < 1.0 / 6.0))
    throw ParameterError("eta must satisfy 0 < eta < 1/6 (eta=" + std::to_string(eta) + ")");
  ProofSets s;
  s.eta = eta;
  const int n = g.order();
  s.low_degree_threshold = (2.0 / 3.0 - 6.0 * eta) * n;
  // d <= (2/3 - 6 eta) n, compared as 3d <= (2 - 18 eta) n to keep ties exact.
  for (int v = 0; v < n; ++v)
    if (3.0 * g.degree(v) <= (2.0 - 18.0 * eta) * n) s.low_degree.push_back(v);
  s.w1 = heavy_sets(g, parts, eta, 1);
  s.w5 = heavy_sets(g, parts, eta, 5);
  trim(s.w1, parts, s.low_degree);
  trim(s.w5, parts, s.low_degree);
  return s;
}

bool partition_size_check(const TriPartition& parts, double eta) {
  const std::size_t n = parts.parts[0].size() + parts.parts[1].size() + parts.parts[2].size();
  for (const auto& part : parts.parts)
    if (std::abs(3.0 * part.size() - static_cast<double>(n)) > 3.0 * eta * n) return false;
  return true;
}

double eta_upper_bound(int k) {
  if (k < 1) throw ParameterError("k must be >= 1 (k=" + std::to_string(k) + ")");
  return 1.0 / (9.0 * (120.0 * k + 48.0));
}

AuditResult lemma_audit(const Graph& g, double eta, const AuditOptions& options) {
  AuditResult a;
  const int n = g.order();
  if (options.k) {
    const double cap = eta_upper_bound(*options.k);
    if (!(eta < cap))
      a.warnings.push_back("eta=" + std::to_string(eta) + " violates eta < 1/(9(120k+48)) = " + std::to_string(cap) +
                           " for k=" + std::to_string(*options.k));
  }

  MaxCutOptions mc = options.maxcut;
  if (n <= 15) mc.mode = MaxCutMode::exact;
  a.partition = max_cross_tripartition(g, mc).partition;
  a.sets = compute_proof_sets(g, a.partition, eta);
  for (int i = 0; i < 3; ++i) a.part_matching[i] = matching_number(g, a.partition.parts[i]);

  const SpectralResult spec = spectral_radius(g, options.spectral);
  const EigenvectorProfile prof = eigenvector_profile(spec);
  a.perron_floor = prof.ratio_floor;
  a.max_entry_vertex = prof.max_entry_vertex;

  const double nn = n;
  auto add = [&](std::string id, bool holds, std::vector<std::pair<std::string, double>> q,
                 std::vector<std::pair<std::string, double>> t) {
    a.reports.push_back({std::move(id), holds, std::move(q), std::move(t)});
  };

  std::array<double, 3> sizes{};
  for (int i = 0; i < 3; ++i) sizes[i] = static_cast<double>(a.partition.parts[i].size());
  add("part-sizes-balanced", partition_size_check(a.partition, eta),
      {{"size1", sizes[0]}, {"size2", sizes[1]}, {"size3", sizes[2]}}, {{"max_deviation", eta * nn}});
  add("internal-edges-sparse", a.partition.internal_edges <= eta * eta * eta * nn * nn,
      {{"internal_edges", static_cast<double>(a.partition.internal_edges)}}, {{"eta3_n2", eta * eta * eta * nn * nn}});

  const double s_size = static_cast<double>(a.sets.low_degree.size());
  add("low-degree-set-small", s_size <= eta * nn, {{"S", s_size}}, {{"eta_n", eta * nn}});

  for (const HeavySets* w : {&a.sets.w1, &a.sets.w5}) {
    const double bound = eta * eta * nn / std::ldexp(1.0, w->lambda - 1);
    const double size = static_cast<double>(w->all.size());
    add("heavy-set-small-" + std::to_string(w->lambda), size <= bound, {{"W", size}},
        {{"degree_threshold", w->threshold}, {"size_bound", bound}});
  }

  for (const HeavySets* w : {&a.sets.w1, &a.sets.w5}) {
    std::vector<std::pair<std::string, double>> q;
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      const int nu = matching_number(g, w->trimmed[i]);
      q.emplace_back("nu" + std::to_string(i + 1), nu);
      ok = ok && nu <= 1;
    }
    add("trimmed-matching-at-most-one-" + std::to_string(w->lambda), ok, std::move(q), {{"max_nu", 1}});
  }

  add("low-degree-set-empty", a.sets.low_degree.empty(), {{"S", s_size}, {"min_degree", static_cast<double>(g.min_degree())}},
      {{"degree_threshold", a.sets.low_degree_threshold}});

  const double w5 = static_cast<double>(a.sets.w5.all.size());
  add("heavy5-at-most-one", w5 <= 1, {{"W5", w5}}, {{"max", 1}});
  add("perron-floor", a.perron_floor > 0.6 - options.floor_slack,
      {{"floor", a.perron_floor}, {"rho", spec.rho}, {"u_star", a.max_entry_vertex}}, {{"floor_min", 0.6}});
  add("heavy5-exactly-one", w5 == 1, {{"W5", w5}}, {{"expected", 1}});
  const int nu_sum = a.part_matching[0] + a.part_matching[1] + a.part_matching[2];
  add("part-matching-sum-one", nu_sum == 1,
      {{"nu1", a.part_matching[0]}, {"nu2", a.part_matching[1]}, {"nu3", a.part_matching[2]}, {"sum", nu_sum}},
      {{"expected", 1}});
  return a;
}

}  // namespace sqturan
