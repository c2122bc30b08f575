#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sqturan/graph_io.hpp"

namespace sqturan::oracle {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  GraphBuilder b(random_graph(n, p, rng));
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    b.add_edge(v, pick(rng));
  }
  return b.build();
}

std::vector<double> jacobi_eigenvalues(const Graph& g, double tol) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (auto [u, v] : g.edges()) at(u, v) = at(v, u) = 1.0;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (std::sqrt(off) < tol) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

double jacobi_spectral_radius(const Graph& g) { return jacobi_eigenvalues(g).back(); }

namespace {

int matching_rec(const Graph& g, VertexSet free) {
  const int v = free.first();
  if (v < 0) return 0;
  free.reset(v);
  int best = matching_rec(g, free);
  const VertexSet nb = g.neighbors(v) & free;
  for (int u = nb.first(); u >= 0; u = nb.next(u)) {
    VertexSet rest = free;
    rest.reset(u);
    best = std::max(best, 1 + matching_rec(g, rest));
  }
  return best;
}

bool color_rec(const Graph& g, int k, std::vector<int>& color, int v) {
  if (v == g.order()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < v; ++u) ok = ok && !(g.adjacent(u, v) && color[u] == c);
    if (!ok) continue;
    color[v] = c;
    if (color_rec(g, k, color, v + 1)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

int brute_matching_number(const Graph& g) { return matching_rec(g, g.vertices()); }

bool brute_k_colorable(const Graph& g, int k) {
  std::vector<int> color(g.order(), -1);
  return color_rec(g, k, color, 0);
}

int brute_chromatic_number(const Graph& g) {
  int k = 1;
  while (!brute_k_colorable(g, k)) ++k;
  return k;
}

std::int64_t brute_max_cross(const Graph& g) {
  const int n = g.order();
  if (n > 12) throw std::invalid_argument("brute max cross limited to n <= 12");
  std::vector<int> part(n, 0);
  const auto edges = g.edges();
  std::int64_t best = 0;
  while (true) {
    std::int64_t cross = 0;
    for (auto [u, v] : edges) cross += part[u] != part[v];
    best = std::max(best, cross);
    int i = 0;
    while (i < n && part[i] == 2) part[i++] = 0;
    if (i == n) break;
    ++part[i];
  }
  return best;
}

std::string brute_canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw std::invalid_argument("brute canonical form limited to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    GraphBuilder b(n);
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    std::string s = to_graph6(b.build());
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace sqturan::oracle
