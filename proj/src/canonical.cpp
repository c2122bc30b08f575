#include "sqturan/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "sqturan/error.hpp"
#include "sqturan/graph_io.hpp"

namespace sqturan {

namespace {

using Cells = std::vector<std::vector<int>>;

/// Splits cells by neighbor counts into each splitter cell until the
/// partition is equitable. Pieces are ordered by count, so the result
/// depends only on the isomorphism type of (g, cells).
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      VertexSet splitter;
      for (int v : cells[s]) splitter.set(v);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        for (int v : cells[c]) keyed.emplace_back(g.neighbors(v).intersection_count(splitter), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Cells pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + c);
        cells.insert(cells.begin() + c, pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

std::string leaf_string(const Graph& g, const std::vector<int>& vertex_at) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + (n * (n - 1) / 2 + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(vertex_at[i], vertex_at[j]) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

class Canonizer {
 public:
  Canonizer(const Graph& g, std::int64_t node_limit) : g_(g), limit_(node_limit), orbit_(g.order()) {
    std::iota(orbit_.begin(), orbit_.end(), 0);
  }

  CanonicalLabeling run(Cells cells) {
    search(std::move(cells), 0);
    CanonicalLabeling r;
    r.position.resize(g_.order());
    for (int i = 0; i < g_.order(); ++i) r.position[best_vertex_at_[i]] = i;
    r.form = best_;
    r.nodes = nodes_;
    return r;
  }

 private:
  int find(int v) {
    while (orbit_[v] != v) v = orbit_[v] = orbit_[orbit_[v]];
    return v;
  }

  bool twins(int a, int b) const {
    VertexSet na = g_.neighbors(a), nb = g_.neighbors(b);
    na.reset(b);
    nb.reset(a);
    return na == nb;
  }

  void search(Cells cells, int depth) {
    if (++nodes_ > limit_) throw BudgetExceeded("canonical labeling exceeded its node limit", nodes_);
    refine(g_, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;

    if (target == cells.size()) {
      std::vector<int> vertex_at;
      for (const auto& cell : cells) vertex_at.push_back(cell.front());
      std::string s = leaf_string(g_, vertex_at);
      if (best_.empty() || s < best_) {
        best_ = std::move(s);
        best_vertex_at_ = std::move(vertex_at);
      } else if (s == best_) {
        // Equal leaves differ by an automorphism: best_vertex_at_[i] -> vertex_at[i].
        for (int i = 0; i < g_.order(); ++i) {
          const int a = find(best_vertex_at_[i]);
          const int b = find(vertex_at[i]);
          if (a != b) orbit_[std::max(a, b)] = std::min(a, b);
        }
      }
      return;
    }

    std::vector<int> tried;
    const std::vector<int> cell = cells[target];
    for (int v : cell) {
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      if (depth == 0 && std::any_of(tried.begin(), tried.end(), [&](int u) { return find(u) == find(v); })) continue;
      tried.push_back(v);
      Cells next = cells;
      auto& rest = next[target];
      rest.erase(std::find(rest.begin(), rest.end(), v));
      next.insert(next.begin() + target, std::vector<int>{v});
      search(std::move(next), depth + 1);
    }
  }

  const Graph& g_;
  std::int64_t limit_;
  std::int64_t nodes_ = 0;
  std::string best_;
  std::vector<int> best_vertex_at_;
  std::vector<int> orbit_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::optional<int> individualized, const CanonOptions& options) {
  const int n = g.order();
  if (n > options.max_order)
    throw ParameterError("canonical form limited to n <= " + std::to_string(options.max_order) +
                         " (n=" + std::to_string(n) + ")");
  Cells cells;
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!individualized || v != *individualized) rest.push_back(v);
  if (individualized) {
    if (*individualized < 0 || *individualized >= n)
      throw ParameterError("individualized vertex " + std::to_string(*individualized) + " out of range");
    cells.push_back({*individualized});
  }
  if (!rest.empty()) cells.push_back(std::move(rest));
  return Canonizer(g, options.node_limit).run(std::move(cells));
}

Graph relabel(const Graph& g, const std::vector<int>& position) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(position[u], position[v]);
  return b.build();
}

}  // namespace sqturan
