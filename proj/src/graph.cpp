#include "sqturan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "sqturan/error.hpp"

namespace sqturan {

void check_order(std::int64_t n, const char* what) {
  if (n < 1 || n > kMaxVertices)
    throw ParameterError(std::string(what) + ": vertex count " + std::to_string(n) +
                         " outside [1, " + std::to_string(kMaxVertices) + "]");
}

Graph Graph::edgeless(int n) {
  check_order(n, "graph");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, VertexSet{});
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

std::int64_t Graph::edge_count() const {
  std::int64_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

int Graph::min_degree() const {
  int d = n_;
  for (const auto& row : adj_) d = std::min(d, row.count());
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& row : adj_) d = std::max(d, row.count());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

void Graph::check_invariants() const {
  const VertexSet all = vertices();
  for (int u = 0; u < n_; ++u) {
    if (adj_[u].test(u)) throw InternalCheckError("graph has a loop at " + std::to_string(u));
    if (!(adj_[u] - all).empty()) throw InternalCheckError("adjacency row exceeds vertex range");
    adj_[u].for_each([&](int v) {
      if (!adj_[v].test(u))
        throw InternalCheckError("asymmetric adjacency " + std::to_string(u) + "-" + std::to_string(v));
    });
  }
}

GraphBuilder::GraphBuilder(int n) : g_(Graph::edgeless(n)) {}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check_vertex(int v) const {
  if (v < 0 || v >= g_.n_)
    throw ParameterError("vertex id " + std::to_string(v) + " outside [0, " + std::to_string(g_.n_) + ")");
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
  g_.adj_[u].set(v);
  g_.adj_[v].set(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  g_.adj_[u].reset(v);
  g_.adj_[v].reset(u);
  return *this;
}

GraphBuilder& GraphBuilder::connect(int v, const VertexSet& s) {
  s.for_each([&](int u) {
    if (u != v) add_edge(v, u);
  });
  return *this;
}

Graph GraphBuilder::build() const {
#ifndef NDEBUG
  g_.check_invariants();
#endif
  return g_;
}

// ---------------------------------------------------------------------------
// Families

FamilyPtr GraphFamily::cycle(int length) { return std::make_shared<GraphFamily>(GraphFamily{CycleFamily{length}}); }
FamilyPtr GraphFamily::path(int length) { return std::make_shared<GraphFamily>(GraphFamily{PathFamily{length}}); }
FamilyPtr GraphFamily::power(FamilyPtr base, int k) {
  return std::make_shared<GraphFamily>(GraphFamily{PowerFamily{std::move(base), k}});
}
FamilyPtr GraphFamily::turan(int n, int r) { return std::make_shared<GraphFamily>(GraphFamily{TuranFamily{n, r}}); }
FamilyPtr GraphFamily::multipartite(std::vector<int> parts) {
  return std::make_shared<GraphFamily>(GraphFamily{MultipartiteFamily{std::move(parts)}});
}
FamilyPtr GraphFamily::join(FamilyPtr left, FamilyPtr right) {
  return std::make_shared<GraphFamily>(GraphFamily{JoinFamily{std::move(left), std::move(right)}});
}
FamilyPtr GraphFamily::gn(int n) { return std::make_shared<GraphFamily>(GraphFamily{ApexTuranFamily{n}}); }

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

}  // namespace

std::string GraphFamily::describe() const {
  return std::visit(
      overloaded{
          [](const CycleFamily& c) { return "C_" + std::to_string(c.length); },
          [](const PathFamily& p) { return "P_" + std::to_string(p.length); },
          [](const PowerFamily& p) { return "(" + p.base->describe() + ")^" + std::to_string(p.k); },
          [](const TuranFamily& t) { return "T_{" + std::to_string(t.n) + "," + std::to_string(t.r) + "}"; },
          [](const MultipartiteFamily& m) {
            std::string s = "K(";
            for (std::size_t i = 0; i < m.parts.size(); ++i) s += (i ? "," : "") + std::to_string(m.parts[i]);
            return s + ")";
          },
          [](const JoinFamily& j) { return "(" + j.left->describe() + ")+(" + j.right->describe() + ")"; },
          [](const ApexTuranFamily& g) { return "G(" + std::to_string(g.n) + ")"; },
      },
      kind);
}

Graph build(const GraphFamily& spec) {
  Graph g = std::visit(overloaded{
                           [](const CycleFamily& c) { return cycle_graph(c.length); },
                           [](const PathFamily& p) { return path_graph(p.length); },
                           [](const PowerFamily& p) { return graph_power(build(*p.base), p.k); },
                           [](const TuranFamily& t) { return turan_graph(t.n, t.r); },
                           [](const MultipartiteFamily& m) { return complete_multipartite(m.parts); },
                           [](const JoinFamily& j) { return join(build(*j.left), build(*j.right)); },
                           [](const ApexTuranFamily& a) { return gn_graph(a.n); },
                       },
                       spec.kind);
  g.check_invariants();
  return g;
}

Graph cycle_graph(int length) {
  if (length < 3) throw ParameterError("cycle length " + std::to_string(length) + " below 3");
  check_order(length, "cycle");
  GraphBuilder b(length);
  for (int i = 0; i < length; ++i) b.add_edge(i, (i + 1) % length);
  return b.build();
}

Graph path_graph(int length) {
  check_order(length, "path");
  GraphBuilder b(length);
  for (int i = 0; i + 1 < length; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph complete_graph(int n) {
  check_order(n, "complete graph");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.connect(v, VertexSet::prefix(n));
  return b.build();
}

Graph graph_power(const Graph& g, int k) {
  if (k < 1) throw ParameterError("power exponent " + std::to_string(k) + " below 1");
  const int n = g.order();
  GraphBuilder b(n);
  for (int s = 0; s < n; ++s) {
    VertexSet reached;
    reached.set(s);
    VertexSet frontier = reached;
    for (int step = 0; step < k && !frontier.empty(); ++step) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      next -= reached;
      reached |= next;
      frontier = next;
    }
    reached.reset(s);
    b.connect(s, reached);
  }
  return b.build();
}

Graph squared_cycle(int length) { return graph_power(cycle_graph(length), 2); }

Graph squared_path(int length) { return graph_power(path_graph(length), 2); }

std::vector<int> turan_part_sizes(int n, int r) {
  if (r < 1) throw ParameterError("Turan part count " + std::to_string(r) + " below 1");
  if (n < r) throw ParameterError("Turan graph needs n >= r (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  std::vector<int> parts(r, n / r);
  for (int i = 0; i < n % r; ++i) ++parts[i];
  return parts;
}

Graph turan_graph(int n, int r) {
  check_order(n, "Turan graph");
  auto parts = turan_part_sizes(n, r);
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw ParameterError("multipartite graph needs at least one part");
  std::int64_t n = 0;
  for (int p : parts) {
    if (p < 1) throw ParameterError("multipartite part size " + std::to_string(p) + " below 1");
    n += p;
  }
  check_order(n, "multipartite graph");
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  GraphBuilder b(static_cast<int>(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return b.build();
}

Graph join(const Graph& left, const Graph& right) {
  const int a = left.order();
  const int n = a + right.order();
  check_order(n, "join");
  GraphBuilder b(n);
  for (auto [u, v] : left.edges()) b.add_edge(u, v);
  for (auto [u, v] : right.edges()) b.add_edge(a + u, a + v);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph gn_graph(int n) {
  if (n < 4) throw ParameterError("G(n) needs n >= 4 (n=" + std::to_string(n) + ")");
  check_order(n, "G(n)");
  return join(Graph::edgeless(1), turan_graph(n - 1, 3));
}

std::int64_t turan_edge_count(int n, int r) {
  auto parts = turan_part_sizes(n, r);
  std::int64_t sq = 0;
  for (std::int64_t p : parts) sq += p * p;
  return (std::int64_t{n} * n - sq) / 2;
}

std::int64_t gn_edge_count(int n) {
  const std::int64_t m = n - 1;
  return m * m / 3 + m;
}

// ---------------------------------------------------------------------------
// Derived graphs

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= g.order())
      throw ParameterError("vertex id " + std::to_string(v) + " outside [0, " + std::to_string(g.order()) + ")");
    s.set(v);
  }
  return induced_subgraph(g, s);
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  if (!(vertices - g.vertices()).empty()) throw ParameterError("induced subgraph vertex outside host");
  std::vector<int> ids;
  vertices.for_each([&](int v) { ids.push_back(v); });
  check_order(static_cast<int>(ids.size()), "induced subgraph");
  GraphBuilder b(static_cast<int>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (g.adjacent(ids[i], ids[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
  return b.build();
}

Graph delete_edges(const Graph& g, std::span<const Edge> edges) {
  GraphBuilder b(g);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !b.has_edge(u, v))
      throw ParameterError("cannot delete nonexistent edge " + std::to_string(u) + "-" + std::to_string(v));
    b.remove_edge(u, v);
  }
  return b.build();
}

Graph add_edges(const Graph& g, std::span<const Edge> edges) {
  GraphBuilder b(g);
  for (auto [u, v] : edges) {
    if (u >= 0 && v >= 0 && u < g.order() && v < g.order() && b.has_edge(u, v))
      throw ParameterError("edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
    b.add_edge(u, v);
  }
  return b.build();
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw ParameterError("vertex id " + std::to_string(v) + " outside [0, " + std::to_string(g.order()) + ")");
  VertexSet keep = g.vertices();
  keep.reset(v);
  return induced_subgraph(g, keep);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    const int s = unseen.first();
    VertexSet comp;
    comp.set(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    unseen -= comp;
    auto& ids = out.emplace_back();
    comp.for_each([&](int v) { ids.push_back(v); });
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

// Edmonds' blossom algorithm, O(n^3).
Matching max_matching(const Graph& g) {
  const int n = g.order();
  std::vector<int> match(n, -1), parent(n), base(n);
  std::vector<char> used(n), blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    while (true) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to = g.neighbors(v).first(); to >= 0; to = g.neighbors(v).next(to)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return -1;
  };

  // Greedy warm start.
  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    for (int to = g.neighbors(v).first(); to >= 0; to = g.neighbors(v).next(to)) {
      if (match[to] == -1) {
        match[to] = v;
        match[v] = to;
        break;
      }
    }
  }

  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int end = find_path(v);
    while (end != -1) {
      const int pv = parent[end];
      const int ppv = match[pv];
      match[end] = pv;
      match[pv] = end;
      end = ppv;
    }
  }

  Matching m;
  for (int v = 0; v < n; ++v)
    if (match[v] > v) m.edges.emplace_back(v, match[v]);
  return m;
}

}  // namespace sqturan
