#include "sqturan/detector.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "sqturan/error.hpp"

namespace sqturan {

namespace {

/// Removes vertices of degree < k (within the set) until none remain.
VertexSet k_core(const Graph& g, VertexSet alive, int k) {
  bool changed = true;
  while (changed) {
    changed = false;
    alive.for_each([&](int v) {
      if (g.neighbors(v).intersection_count(alive) < k) {
        alive.reset(v);
        changed = true;
      }
    });
  }
  return alive;
}

/// Class id per vertex for vertices that have a twin (same neighborhood
/// apart from each other), -1 for vertices without one.
std::vector<int> twin_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::map<VertexSet, std::vector<int>> open, closed;
  for (int v = 0; v < n; ++v) open[g.neighbors(v)].push_back(v);
  int next = 0;
  for (auto& [key, members] : open) {
    if (members.size() < 2) continue;
    for (int v : members) cls[v] = next;
    ++next;
  }
  for (int v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    VertexSet nb = g.neighbors(v);
    nb.set(v);
    closed[nb].push_back(v);
  }
  for (auto& [key, members] : closed) {
    if (members.size() < 2) continue;
    for (int v : members) cls[v] = next;
    ++next;
  }
  return cls;
}

struct SharedBudget {
  std::atomic<std::int64_t> nodes{0};
  std::int64_t limit = 0;
};

/// Position-by-position extension of a cyclic ordering on a graph whose
/// labels are already sorted by search priority.
class CycleExtender {
 public:
  CycleExtender(const Graph& g, int ell, const std::vector<int>& twin_class, bool break_direction,
                SharedBudget& budget, int lookahead_min_pool)
      : g_(g),
        ell_(ell),
        twin_class_(twin_class),
        break_direction_(break_direction),
        budget_(budget),
        lookahead_min_pool_(lookahead_min_pool),
        ord_(ell, -1),
        seen_class_(ell) {}

  /// u0 fixed; u1 free (or fixed); u2 free (or fixed). Returns true on success.
  bool run(int u0, const VertexSet& pool, int fixed_u1 = -1, int fixed_u2 = -1) {
    pool_ = pool;
    fixed_u2_ = fixed_u2;
    lookahead_ = pool.count() >= lookahead_min_pool_;
    ord_[0] = u0;
    used_ = VertexSet{};
    used_.set(u0);

    VertexSet cand1;
    if (fixed_u1 >= 0) {
      if (!g_.adjacent(u0, fixed_u1) || !pool_.test(fixed_u1)) return false;
      cand1.set(fixed_u1);
    } else {
      cand1 = g_.neighbors(u0) & pool_;
      cand1 -= used_;
    }
    auto& seen = seen_class_[1];
    seen.clear();
    for (int u1 = cand1.first(); u1 >= 0; u1 = cand1.next(u1)) {
      if (fixed_u1 < 0 && !first_of_class(u1, seen)) continue;
      tick();
      ord_[1] = u1;
      used_.set(u1);
      if (lookahead_) build_reach(u0, u1);
      const bool found = extend(2);
      used_.reset(u1);
      if (found) return true;
    }
    return false;
  }

  const std::vector<int>& ordering() const { return ord_; }

 private:
  void tick() {
    const auto n = budget_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_.limit) throw BudgetExceeded("squared-cycle search exceeded its node limit", n);
  }

  bool first_of_class(int v, std::vector<int>& seen) const {
    const int c = twin_class_[v];
    if (c < 0) return true;
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) return false;
    seen.push_back(c);
    return true;
  }

  // reach_[t][a]: vertices b such that the pair (a, b) occupying positions
  // (ell-2-t, ell-1-t) can be completed, ignoring injectivity, to a closed
  // squared cycle through u0, u1.
  void build_reach(int u0, int u1) {
    const int steps = std::max(ell_ - 2, 1);
    reach_.assign(steps, std::vector<VertexSet>(g_.order()));
    VertexSet free = pool_ - used_;
    VertexSet sources = free;
    sources.set(u1);
    const VertexSet closing = g_.neighbors(u0) & g_.neighbors(u1) & free;
    sources.for_each([&](int a) {
      if (g_.adjacent(a, u0)) reach_[0][a] = g_.neighbors(a) & closing;
    });
    for (int t = 0; t + 1 < steps; ++t) {
      sources.for_each([&](int a) {
        VertexSet out;
        const VertexSet nb = g_.neighbors(a) & free;
        nb.for_each([&](int b) {
          if (g_.neighbors(a).intersects(reach_[t][b])) out.set(b);
        });
        reach_[t + 1][a] = out;
      });
    }
  }

  bool extend(int i) {
    if (i == ell_) return true;
    tick();
    VertexSet cand = g_.neighbors(ord_[i - 1]) & g_.neighbors(ord_[i - 2]) & pool_;
    cand -= used_;
    if (i >= ell_ - 2) cand &= g_.neighbors(ord_[0]);
    if (i == ell_ - 1) cand &= g_.neighbors(ord_[1]);
    if (lookahead_) cand &= reach_[ell_ - 1 - i][ord_[i - 1]];
    if (i == 2 && fixed_u2_ >= 0) {
      const bool ok = cand.test(fixed_u2_);
      cand = VertexSet{};
      if (ok) cand.set(fixed_u2_);
    }
    auto& seen = seen_class_[i];
    seen.clear();
    for (int c = cand.first(); c >= 0; c = cand.next(c)) {
      if (i == ell_ - 1 && break_direction_ && c < ord_[1]) continue;
      if (!(i == 2 && fixed_u2_ >= 0) && !first_of_class(c, seen)) continue;
      ord_[i] = c;
      used_.set(c);
      const bool found = extend(i + 1);
      used_.reset(c);
      if (found) return true;
    }
    return false;
  }

  const Graph& g_;
  int ell_;
  const std::vector<int>& twin_class_;
  bool break_direction_;
  SharedBudget& budget_;
  int lookahead_min_pool_;
  bool lookahead_ = false;
  int fixed_u2_ = -1;
  VertexSet pool_;
  VertexSet used_;
  std::vector<int> ord_;
  std::vector<std::vector<int>> seen_class_;
  std::vector<std::vector<VertexSet>> reach_;
};

/// Host relabeled by ascending (degree, id); search runs on the relabeled copy.
struct PreparedHost {
  Graph graph;
  std::vector<int> to_new;
  std::vector<int> to_old;
};

PreparedHost prepare(const Graph& g) {
  const int n = g.order();
  PreparedHost p;
  p.to_old.resize(n);
  std::iota(p.to_old.begin(), p.to_old.end(), 0);
  std::stable_sort(p.to_old.begin(), p.to_old.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  p.to_new.resize(n);
  for (int i = 0; i < n; ++i) p.to_new[p.to_old[i]] = i;
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(p.to_new[u], p.to_new[v]);
  p.graph = b.build();
  return p;
}

void check_ell(int ell) {
  if (ell < 3) throw ParameterError("squared cycle length " + std::to_string(ell) + " below 3");
}

int min_pattern_degree(int ell) { return std::min(4, ell - 1); }

DetectResult finish(const PreparedHost& p, int ell, const std::vector<int>& ord, std::int64_t nodes) {
  DetectResult r;
  r.nodes = nodes;
  SquaredCycleEmbedding e{ell, {}};
  for (int v : ord) e.ordering.push_back(p.to_old[v]);
  r.embedding = std::move(e);
  return r;
}

bool has_nontrivial_twins(const std::vector<int>& cls) {
  return std::any_of(cls.begin(), cls.end(), [](int c) { return c >= 0; });
}

}  // namespace

DetectResult find_squared_cycle(const Graph& g, int ell, const DetectorOptions& options) {
  check_ell(ell);
  if (ell > g.order() || g.edge_count() < 2 * ell - (ell == 3 ? 3 : ell == 4 ? 2 : 0)) return {};
  const PreparedHost p = prepare(g);
  const Graph& h = p.graph;
  const auto cls = twin_classes(h);
  const bool direction = !has_nontrivial_twins(cls);

  // Tasks: u0 in priority order, each with the pool left after earlier u0s.
  struct Task {
    int u0;
    VertexSet pool;
  };
  std::vector<Task> tasks;
  VertexSet remaining = k_core(h, h.vertices(), min_pattern_degree(ell));
  for (int u0 = 0; u0 < h.order(); ++u0) {
    if (remaining.count() < ell) break;
    if (!remaining.test(u0)) continue;
    tasks.push_back({u0, remaining});
    remaining.reset(u0);
    remaining = k_core(h, remaining, min_pattern_degree(ell));
  }

  SharedBudget budget;
  budget.limit = options.node_limit;
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(tasks.size())));

  if (threads == 1) {
    CycleExtender ext(h, ell, cls, direction, budget, options.lookahead_min_pool);
    for (const auto& t : tasks)
      if (ext.run(t.u0, t.pool)) return finish(p, ell, ext.ordering(), budget.nodes.load());
    return {std::nullopt, budget.nodes.load()};
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{tasks.size()};
  std::vector<std::vector<int>> found(tasks.size());
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    CycleExtender ext(h, ell, cls, direction, budget, options.lookahead_min_pool);
    try {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        if (i > best.load()) break;
        if (ext.run(tasks[i].u0, tasks[i].pool)) {
          found[i] = ext.ordering();
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  const std::size_t b = best.load();
  if (b < tasks.size()) return finish(p, ell, found[b], budget.nodes.load());
  if (error) std::rethrow_exception(error);
  return {std::nullopt, budget.nodes.load()};
}

DetectResult find_squared_cycle_through_vertex(const Graph& g, int ell, int v, const DetectorOptions& options) {
  check_ell(ell);
  if (v < 0 || v >= g.order()) throw ParameterError("anchor vertex " + std::to_string(v) + " out of range");
  if (ell > g.order()) return {};
  const PreparedHost p = prepare(g);
  const Graph& h = p.graph;
  const int a = p.to_new[v];
  const VertexSet pool = k_core(h, h.vertices(), min_pattern_degree(ell));
  if (!pool.test(a) || pool.count() < ell) return {};
  auto cls = twin_classes(h);
  cls[a] = -1;
  SharedBudget budget;
  budget.limit = options.node_limit;
  CycleExtender ext(h, ell, cls, !has_nontrivial_twins(cls), budget, options.lookahead_min_pool);
  if (ext.run(a, pool)) return finish(p, ell, ext.ordering(), budget.nodes.load());
  return {std::nullopt, budget.nodes.load()};
}

DetectResult find_squared_cycle_through_edge(const Graph& g, int ell, int u, int v, const DetectorOptions& options) {
  check_ell(ell);
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw ParameterError("anchor edge " + std::to_string(u) + "-" + std::to_string(v) + " not in host");
  if (ell > g.order()) return {};
  const PreparedHost p = prepare(g);
  const Graph& h = p.graph;
  const int a = p.to_new[u];
  const int b = p.to_new[v];
  const VertexSet pool = k_core(h, h.vertices(), min_pattern_degree(ell));
  if (!pool.test(a) || !pool.test(b) || pool.count() < ell) return {};
  auto cls = twin_classes(h);
  cls[a] = -1;
  cls[b] = -1;
  SharedBudget budget;
  budget.limit = options.node_limit;
  CycleExtender ext(h, ell, cls, false, budget, options.lookahead_min_pool);
  // Rotate a to position 0 and reflect so that b sits at position 1 or 2.
  if (ext.run(a, pool, b)) return finish(p, ell, ext.ordering(), budget.nodes.load());
  if (ell > 3 && ext.run(a, pool, -1, b)) return finish(p, ell, ext.ordering(), budget.nodes.load());
  return {std::nullopt, budget.nodes.load()};
}

EmbeddingCheck verify_embedding(const Graph& g, const SquaredCycleEmbedding& e) {
  check_ell(e.ell);
  if (static_cast<int>(e.ordering.size()) != e.ell)
    throw ParameterError("embedding has " + std::to_string(e.ordering.size()) + " vertices, expected " +
                         std::to_string(e.ell));
  VertexSet seen;
  for (int v : e.ordering) {
    if (v < 0 || v >= g.order()) throw ParameterError("embedding vertex " + std::to_string(v) + " outside host");
    if (seen.test(v)) throw ParameterError("embedding repeats vertex " + std::to_string(v));
    seen.set(v);
  }
  const int l = e.ell;
  for (int i = 0; i < l; ++i) {
    for (int d = 1; d <= 2; ++d) {
      const int a = e.ordering[i];
      const int b = e.ordering[(i + d) % l];
      if (!g.adjacent(a, b)) return {false, Edge{a, b}};
    }
  }
  return {true, std::nullopt};
}

bool generic_subgraph_oracle(const Graph& host, const Graph& pattern, std::int64_t node_limit) {
  constexpr int kMax = 16;
  if (host.order() > kMax || pattern.order() > kMax)
    throw ParameterError("generic subgraph oracle limited to 16 vertices (host " + std::to_string(host.order()) +
                         ", pattern " + std::to_string(pattern.order()) + ")");
  const int pn = pattern.order();
  if (pn > host.order() || pattern.edge_count() > host.edge_count()) return false;

  // Match order: highest degree first, then most links back into the order.
  std::vector<int> order;
  VertexSet placed;
  for (int step = 0; step < pn; ++step) {
    int pick = -1, best_back = -1, best_deg = -1;
    for (int v = 0; v < pn; ++v) {
      if (placed.test(v)) continue;
      const int back = pattern.neighbors(v).intersection_count(placed);
      const int deg = pattern.degree(v);
      if (back > best_back || (back == best_back && deg > best_deg)) {
        pick = v;
        best_back = back;
        best_deg = deg;
      }
    }
    order.push_back(pick);
    placed.set(pick);
  }

  std::vector<int> image(pn, -1);
  VertexSet used;
  std::int64_t nodes = 0;
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == pn) return true;
    if (++nodes > node_limit) throw BudgetExceeded("generic subgraph oracle exceeded its node limit", nodes);
    const int p = order[depth];
    VertexSet cand = host.vertices() - used;
    pattern.neighbors(p).for_each([&](int q) {
      if (image[q] >= 0) cand &= host.neighbors(image[q]);
    });
    for (int h = cand.first(); h >= 0; h = cand.next(h)) {
      if (host.degree(h) < pattern.degree(p)) continue;
      image[p] = h;
      used.set(h);
      const bool ok = self(self, depth + 1);
      used.reset(h);
      image[p] = -1;
      if (ok) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

// ---------------------------------------------------------------------------
// Witness cycles

int NamedGraph::id(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw ParameterError("no vertex named " + std::string(name));
}

namespace {

std::string name(char prefix, bool star, int part, int index) {
  std::string s(1, prefix);
  if (star) s += '*';
  return s + std::to_string(part) + "." + std::to_string(index);
}

std::string u(int part, int index) { return name('u', false, part, index); }
std::string us(int part, int index) { return name('u', true, part, index); }
std::string v(int part, int index) { return name('v', false, part, index); }

void append_triples(std::vector<std::string>& out, char prefix, int from, int to, std::array<int, 3> parts) {
  for (int j = from; j <= to; ++j)
    for (int part : parts) out.push_back(name(prefix, false, part, j));
}

/// Internal edges each situation assumes, as name pairs.
std::vector<std::pair<std::string, std::string>> assumed_internal_edges(WitnessCycle kind) {
  switch (kind) {
    case WitnessCycle::TwoEdgesOnePart:
    case WitnessCycle::TwoHeavySamePart:
    case WitnessCycle::HeavyPlusEdgeSamePart:
      return {{us(1, 1), u(1, 1)}, {us(1, 2), u(1, 2)}};
    case WitnessCycle::HeavyPairCommonMiddle:
    case WitnessCycle::HeavyPairSparseMiddle:
    case WitnessCycle::EdgesInTwoParts:
      return {{us(1, 1), u(1, 1)}, {us(3, 1), u(3, 1)}};
  }
  return {};
}

}  // namespace

std::vector<std::string> witness_cycle(WitnessCycle kind, int k) {
  if (k < 2) throw ParameterError("witness cycles need k >= 2 (k=" + std::to_string(k) + ")");
  std::vector<std::string> c;
  switch (kind) {
    case WitnessCycle::TwoEdgesOnePart:
      c = {us(1, 1), u(1, 1), u(2, 1), u(3, 1), us(1, 2), u(1, 2), u(2, 2), u(3, 2)};
      append_triples(c, 'u', 3, k, {1, 2, 3});
      break;
    case WitnessCycle::TwoHeavySamePart:
      c = {us(1, 1), u(1, 1), u(2, 1), u(3, 1), us(1, 2), u(1, 2), u(2, 2), u(3, 2)};
      append_triples(c, 'v', 1, k - 2, {1, 2, 3});
      break;
    case WitnessCycle::HeavyPairCommonMiddle:
      c = {us(1, 1), u(1, 1), u(2, 1), u(3, 1), us(3, 1), u(1, 2), u(2, 2), u(3, 2)};
      append_triples(c, 'v', 1, k - 2, {1, 2, 3});
      break;
    case WitnessCycle::HeavyPairSparseMiddle:
      c = {us(3, 1), u(3, 1), u(1, 1), us(1, 1), u(2, 1)};
      append_triples(c, 'v', 1, k - 1, {3, 1, 2});
      break;
    case WitnessCycle::HeavyPlusEdgeSamePart:
      c = {u(1, 1), us(1, 1), u(2, 1), u(3, 1), u(1, 2), us(1, 2), u(2, 2), u(3, 2)};
      append_triples(c, 'u', 3, k, {1, 2, 3});
      break;
    case WitnessCycle::EdgesInTwoParts:
      c = {us(1, 1), u(1, 1), u(2, 1), us(3, 1), u(3, 1), u(1, 2), u(2, 2), u(3, 2)};
      append_triples(c, 'u', 3, k, {1, 2, 3});
      break;
  }
  return c;
}

int witness_part(std::string_view n) {
  std::size_t i = 1;
  if (i < n.size() && n[i] == '*') ++i;
  if (i >= n.size() || n[i] < '1' || n[i] > '3') throw ParameterError("malformed witness name " + std::string(n));
  return n[i] - '0';
}

NamedGraph witness_host(WitnessCycle kind, int k) {
  NamedGraph h;
  h.names = witness_cycle(kind, k);
  std::sort(h.names.begin(), h.names.end());
  const int n = static_cast<int>(h.names.size());
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (witness_part(h.names[i]) != witness_part(h.names[j])) b.add_edge(i, j);
  for (const auto& [x, y] : assumed_internal_edges(kind)) b.add_edge(h.id(x), h.id(y));
  h.graph = b.build();
  return h;
}

NamedGraph figure_host(int figure) {
  // Drawn node positions, shared by all three figures.
  enum Pos { A, B, C, D, E, F, G, H };  // (70,120) (80,120) (90,110) (90,100) (80,90) (70,90) (60,100) (60,110)
  static const std::vector<Edge> drawn = {
      {B, C}, {C, D}, {F, E}, {E, D}, {B, D}, {C, E}, {A, C}, {A, B},
      {G, F}, {H, G}, {H, A}, {F, D}, {E, G}, {H, F}, {H, B}, {A, G},
  };
  NamedGraph h;
  switch (figure) {
    case 1:
      h.names = {us(1, 1), u(1, 1), u(2, 1), u(3, 1), us(1, 2), u(1, 2), u(2, 2), u(3, 2)};
      break;
    case 2:
      h.names = {us(1, 1), u(1, 1), u(2, 1), u(3, 1), us(3, 1), u(1, 2), u(2, 2), u(3, 2)};
      break;
    case 3:
      h.names = {us(3, 1), u(3, 1), u(1, 1), us(1, 1), u(2, 1), v(3, 1), v(1, 1), v(2, 1)};
      break;
    default:
      throw ParameterError("figure must be 1, 2 or 3 (got " + std::to_string(figure) + ")");
  }
  h.graph = Graph::from_edges(8, drawn);
  return h;
}

SquaredCycleEmbedding embedding_from_names(const NamedGraph& host, const std::vector<std::string>& names) {
  SquaredCycleEmbedding e{static_cast<int>(names.size()), {}};
  for (const auto& n : names) e.ordering.push_back(host.id(n));
  return e;
}

}  // namespace sqturan
