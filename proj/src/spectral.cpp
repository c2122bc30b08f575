#include "sqturan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sqturan/error.hpp"

namespace sqturan {

namespace {

void multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    double s = 0.0;
    g.neighbors(v).for_each([&](int u) { s += x[u]; });
    y[v] = s;
  }
}

double norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double a : x) s += a * a;
  return std::sqrt(s);
}

SpectralResult power_iteration(const Graph& g, const SpectralOptions& options) {
  const int n = g.order();
  SpectralResult r;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n);
  if (g.edge_count() == 0) {
    r.vector = x;
    return r;
  }
  for (std::int64_t it = 1; it <= options.max_iterations; ++it) {
    multiply(g, x, ax);
    double rho = 0.0;
    for (int v = 0; v < n; ++v) rho += x[v] * ax[v];
    double res = 0.0;
    for (int v = 0; v < n; ++v) res += (ax[v] - rho * x[v]) * (ax[v] - rho * x[v]);
    res = std::sqrt(res);
    if (res <= options.tol) {
      r.rho = rho;
      r.vector = x;
      r.residual = res;
      r.iterations = it;
      return r;
    }
    // Shifted step x <- (A + I) x / ||.||
    for (int v = 0; v < n; ++v) ax[v] += x[v];
    const double nrm = norm(ax);
    for (int v = 0; v < n; ++v) x[v] = ax[v] / nrm;
  }
  throw ConvergenceError("power iteration did not reach residual " + std::to_string(options.tol) + " within " +
                         std::to_string(options.max_iterations) + " iterations");
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options) {
  if (!(options.tol > 0.0)) throw ParameterError("spectral tolerance must be positive");
  const auto comps = connected_components(g);
  if (comps.size() == 1) return power_iteration(g, options);

  SpectralResult best;
  bool first = true;
  for (const auto& comp : comps) {
    const Graph h = induced_subgraph(g, comp);
    SpectralResult r = power_iteration(h, options);
    if (first || r.rho > best.rho) {
      best.rho = r.rho;
      best.residual = r.residual;
      best.vector.assign(g.order(), 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) best.vector[comp[i]] = r.vector[i];
      first = false;
    }
    best.iterations += r.iterations;
  }
  best.disconnected = true;
  return best;
}

EigenvectorProfile eigenvector_profile(const SpectralResult& r) {
  if (r.vector.empty()) throw ParameterError("eigenvector profile of an empty vector");
  EigenvectorProfile p;
  const auto mx = std::max_element(r.vector.begin(), r.vector.end());
  p.max_entry_vertex = static_cast<int>(mx - r.vector.begin());
  p.ratio_floor = *std::min_element(r.vector.begin(), r.vector.end()) / *mx;
  return p;
}

double rayleigh_lower_bound(const Graph& g) { return 2.0 * static_cast<double>(g.edge_count()) / g.order(); }

double eigen_residual(const Graph& g, const std::vector<double>& x, double rho) {
  std::vector<double> ax(g.order());
  multiply(g, x, ax);
  double s = 0.0;
  for (int v = 0; v < g.order(); ++v) s += (ax[v] - rho * x[v]) * (ax[v] - rho * x[v]);
  return std::sqrt(s);
}

BalanceReport eigenvector_balance_check(int n1, int n2, int n3, double tolerance, const SpectralOptions& options) {
  if (n1 < 1 || n2 < 1 || n3 < 1)
    throw ParameterError("balance check needs every part size >= 1 (got " + std::to_string(n1) + "," +
                         std::to_string(n2) + "," + std::to_string(n3) + ")");
  BalanceReport b;
  b.sizes = {n1, n2, n3};
  const std::array<int, 3> sizes{n1, n2, n3};
  const Graph g = join(complete_graph(1), complete_multipartite(sizes));
  const SpectralResult r = spectral_radius(g, options);
  b.rho = r.rho;
  b.x_apex = r.vector[0];

  int offset = 1;
  for (int i = 0; i < 3; ++i) {
    const auto first = r.vector.begin() + offset;
    const auto last = first + sizes[i];
    const auto [lo, hi] = std::minmax_element(first, last);
    b.within_part_spread = std::max(b.within_part_spread, *hi - *lo);
    b.part_value[i] = std::accumulate(first, last, 0.0) / sizes[i];
    b.closed_form[i] = (b.rho + 1.0) / (b.rho + sizes[i]) * b.x_apex;
    b.closed_form_error = std::max(b.closed_form_error, std::abs(b.part_value[i] - b.closed_form[i]));
    offset += sizes[i];
  }

  // rho x_i = sum_{j != i} n_j x_j + x_apex, and rho x_apex = sum_j n_j x_j.
  double total = 0.0;
  for (int i = 0; i < 3; ++i) total += sizes[i] * b.part_value[i];
  b.system_residual = std::abs(b.rho * b.x_apex - total);
  for (int i = 0; i < 3; ++i) {
    const double rhs = total - sizes[i] * b.part_value[i] + b.x_apex;
    b.system_residual = std::max(b.system_residual, std::abs(b.rho * b.part_value[i] - rhs));
  }

  b.parts_equal = b.within_part_spread <= tolerance;
  b.closed_form_ok = b.closed_form_error <= tolerance;
  b.system_ok = b.system_residual <= tolerance;
  if (n1 >= n3 + 2) {
    b.sign_value = (n1 - n3 - 1) * b.rho - n3;
    b.sign_ok = *b.sign_value > 0.0;
  }
  return b;
}

SpectralComparison spectral_comparisons(int n, const SpectralOptions& options) {
  if (n < 6 || n > kMaxVertices)
    throw ParameterError("spectral comparisons need 6 <= n <= " + std::to_string(kMaxVertices) +
                         " (n=" + std::to_string(n) + ")");
  SpectralComparison c;
  c.n = n;
  c.rho_turan3 = spectral_radius(turan_graph(n, 3), options).rho;
  c.rho_turan2 = spectral_radius(turan_graph(n, 2), options).rho;
  const Graph gn = gn_graph(n);
  c.rho_gn = spectral_radius(gn, options).rho;
  c.rayleigh_gn = rayleigh_lower_bound(gn);
  c.lower_bound_gn = 2.0 * n / 3.0 + 2.0 / 3.0 - 2.0 / n;
  c.turan3_below_gn = c.rho_turan3 < c.rho_gn;
  c.turan2_below_turan3 = c.rho_turan2 < c.rho_turan3;
  c.rayleigh_holds = c.rayleigh_gn <= c.rho_gn + options.tol;
  c.lower_bound_holds = c.rho_gn >= c.lower_bound_gn;
  return c;
}

}  // namespace sqturan
