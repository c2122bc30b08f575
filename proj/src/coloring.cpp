#include "sqturan/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <tuple>

#include "sqturan/error.hpp"

namespace sqturan {

void ColoringCertificate::validate(const Graph& g) const {
  if (static_cast<int>(colors.size()) != g.order()) throw InternalCheckError("coloring size mismatch");
  std::vector<char> used(num_colors, 0);
  for (int c : colors) {
    if (c < 0 || c >= num_colors) throw InternalCheckError("color id out of range");
    used[c] = 1;
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) throw InternalCheckError("coloring skips a color id");
  if (!is_proper_coloring(g, colors)) throw InternalCheckError("coloring is not proper");
}

GoodPartition GoodPartition::canonical() const {
  GoodPartition out = *this;
  for (auto& p : out.parts) std::sort(p.begin(), p.end());
  std::erase_if(out.parts, [](const auto& p) { return p.empty(); });
  std::sort(out.parts.begin(), out.parts.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

void GoodPartition::validate(const Graph& g) const {
  std::vector<int> seen(g.order(), 0);
  for (const auto& part : parts) {
    for (int v : part) {
      if (v < 0 || v >= g.order()) throw InternalCheckError("partition vertex out of range");
      if (seen[v]++) throw InternalCheckError("vertex " + std::to_string(v) + " in two parts");
    }
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (g.adjacent(part[i], part[j]))
          throw InternalCheckError("part is not independent: edge " + std::to_string(part[i]) + "-" +
                                   std::to_string(part[j]));
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InternalCheckError("partition misses a vertex");
}

std::vector<int> GoodPartition::to_colors(int n) const {
  std::vector<int> colors(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) colors[v] = static_cast<int>(i);
  return colors;
}

bool is_proper_coloring(const Graph& g, std::span<const int> colors) {
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

GoodPartition partition_from_colors(std::span<const int> colors) {
  GoodPartition p;
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] >= static_cast<int>(p.parts.size())) p.parts.resize(colors[v] + 1);
    p.parts[colors[v]].push_back(static_cast<int>(v));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Exact chromatic number

namespace {

class DsaturSolver {
 public:
  DsaturSolver(const Graph& g, std::int64_t node_limit)
      : g_(g), n_(g.order()), limit_(node_limit), color_(n_, -1), counts_(n_, std::array<int, 64>{}) {
    sat_.assign(n_, 0);
  }

  ChromaticResult solve() {
    ChromaticResult r;
    auto clique = greedy_clique();
    r.clique_lower_bound = static_cast<int>(clique.size());
    best_ = n_ + 1;
    for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<int>(i));
    lower_ = r.clique_lower_bound;
    search(static_cast<int>(clique.size()), r.clique_lower_bound);
    r.chi = best_;
    r.certificate.colors = best_coloring_;
    r.certificate.num_colors = best_;
    r.certificate.claim = ColoringClaim::equals_chi;
    r.nodes = nodes_;
    r.certificate.validate(g_);
    return r;
  }

 private:
  std::vector<int> greedy_clique() const {
    std::vector<int> best;
    for (int s = 0; s < n_; ++s) {
      std::vector<int> clique{s};
      VertexSet cand = g_.neighbors(s);
      while (!cand.empty()) {
        int pick = -1, pick_deg = -1;
        cand.for_each([&](int v) {
          const int d = g_.neighbors(v).intersection_count(cand);
          if (d > pick_deg) {
            pick_deg = d;
            pick = v;
          }
        });
        clique.push_back(pick);
        cand &= g_.neighbors(pick);
      }
      if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
  }

  void assign(int v, int c) {
    color_[v] = c;
    g_.neighbors(v).for_each([&](int u) {
      if (counts_[u][c]++ == 0) sat_[u] |= std::uint64_t{1} << c;
    });
  }

  void unassign(int v) {
    const int c = color_[v];
    color_[v] = -1;
    g_.neighbors(v).for_each([&](int u) {
      if (--counts_[u][c] == 0) sat_[u] &= ~(std::uint64_t{1} << c);
    });
  }

  int pick_vertex() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      const int s = std::popcount(sat_[v]);
      int d = 0;
      g_.neighbors(v).for_each([&](int u) { d += color_[u] < 0; });
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }
    return best;
  }

  // Returns true once an optimal coloring is certified.
  bool search(int colored, int used) {
    if (++nodes_ > limit_) throw BudgetExceeded("chromatic number search exceeded its node limit", nodes_);
    if (colored == n_) {
      best_ = used;
      best_coloring_ = color_;
      return best_ == lower_;
    }
    const int v = pick_vertex();
    for (int c = 0; c < used; ++c) {
      if (sat_[v] >> c & 1) continue;
      assign(v, c);
      const bool done = search(colored + 1, used);
      unassign(v);
      if (done) return true;
    }
    if (used + 1 < best_) {
      assign(v, used);
      const bool done = search(colored + 1, used + 1);
      unassign(v);
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::int64_t limit_;
  std::int64_t nodes_ = 0;
  int best_ = 0;
  int lower_ = 0;
  std::vector<int> color_;
  std::vector<int> best_coloring_;
  std::vector<std::uint64_t> sat_;
  std::vector<std::array<int, 64>> counts_;
};

// v_j (1-based) is vertex j - 1.
constexpr int vid(int j) { return j - 1; }

std::vector<std::vector<int>> residue_classes(int ell) {
  std::vector<std::vector<int>> parts(3);
  for (int j = 1; j <= ell; ++j) parts[(j - 1) % 3].push_back(vid(j));
  return parts;
}

void erase_vertex(std::vector<int>& part, int v) { std::erase(part, v); }

}  // namespace

ChromaticResult chromatic_number(const Graph& g, const ChromaticOptions& options) {
  if (g.order() > 64)
    throw ParameterError("exact chromatic number limited to n <= 64 (n=" + std::to_string(g.order()) + ")");
  return DsaturSolver(g, options.node_limit).solve();
}

GoodPartition residue_partition_path(int ell) {
  if (ell < 3) throw ParameterError("residue partition needs ell >= 3 (ell=" + std::to_string(ell) + ")");
  GoodPartition p{residue_classes(ell)};
  p.validate(squared_path(ell));
  return p;
}

GoodPartition explicit_cycle_partition(int ell) {
  if (ell < 6) throw ParameterError("explicit cycle coloring needs ell >= 6 (ell=" + std::to_string(ell) + ")");
  auto parts = residue_classes(ell);
  if (ell % 3 == 1) {
    erase_vertex(parts[0], vid(ell));
    parts.push_back({vid(ell)});
  } else if (ell % 3 == 2) {
    auto [a, b, c] = std::tie(parts[0], parts[1], parts[2]);
    erase_vertex(a, vid(1));
    erase_vertex(a, vid(4));
    a.push_back(vid(3));
    erase_vertex(b, vid(2));
    erase_vertex(b, vid(ell));
    b.push_back(vid(1));
    erase_vertex(c, vid(3));
    c.push_back(vid(2));
    parts.push_back({vid(4), vid(ell)});
  }
  GoodPartition p{std::move(parts)};
  p.validate(squared_cycle(ell));
  return p;
}

CriticalDeletion critical_deletion(int ell) {
  if (ell < 6 || ell % 3 == 0)
    throw ParameterError("critical deletion defined for ell >= 6 with ell not divisible by 3 (ell=" +
                         std::to_string(ell) + ")");
  CriticalDeletion d;
  auto parts = residue_classes(ell);
  if (ell % 3 == 1) {
    d.removed = {{vid(1), vid(ell)}};
  } else {
    d.removed = {{vid(ell), vid(1)}, {vid(3), vid(4)}};
    erase_vertex(parts[0], vid(1));
    parts[0].push_back(vid(3));
    erase_vertex(parts[1], vid(2));
    parts[1].push_back(vid(1));
    erase_vertex(parts[2], vid(3));
    parts[2].push_back(vid(2));
  }
  d.partition.parts = std::move(parts);
  d.partition.validate(delete_edges(squared_cycle(ell), d.removed));
  return d;
}

UniquenessResult good_partition_uniqueness_check(int ell, std::int64_t node_limit) {
  if (ell < 4 || ell > 20)
    throw ParameterError("uniqueness check needs 4 <= ell <= 20 (ell=" + std::to_string(ell) + ")");
  const Graph g = squared_path(ell);
  const GoodPartition expected = residue_partition_path(ell).canonical();
  UniquenessResult r;
  r.unique = true;
  std::vector<int> color(ell, -1);
  auto rec = [&](auto&& self, int v) -> void {
    if (++r.nodes > node_limit) throw BudgetExceeded("3-coloring enumeration exceeded its node limit", r.nodes);
    if (v == ell) {
      ++r.colorings;
      if (partition_from_colors(color).canonical() != expected) r.unique = false;
      return;
    }
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      g.neighbors(v).for_each([&](int u) { ok = ok && !(u < v && color[u] == c); });
      if (!ok) continue;
      color[v] = c;
      self(self, v + 1);
      color[v] = -1;
    }
  };
  rec(rec, 0);
  if (r.colorings == 0) r.unique = false;
  return r;
}

}  // namespace sqturan
