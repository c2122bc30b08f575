#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqturan/graph.hpp"

namespace sqturan {

struct SpectralOptions {
  double tol = 1e-10;  // on the residual ||Ax - rho x||_2
  std::int64_t max_iterations = 1'000'000;
};

struct SpectralResult {
  double rho = 0.0;
  std::vector<double> vector;  // unit Perron vector; zero outside the dominant component
  double residual = 0.0;
  std::int64_t iterations = 0;
  /// Set when the host was disconnected and the maximum over components was taken.
  bool disconnected = false;
};

/// Power iteration on A + I from the all-ones vector. Disconnected hosts
/// are handled per component. Throws ConvergenceError past the iteration cap.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options = {});

struct EigenvectorProfile {
  int max_entry_vertex = 0;  // u*, lowest id on ties
  double ratio_floor = 0.0;  // min_v x_v / x_{u*}
};

EigenvectorProfile eigenvector_profile(const SpectralResult& r);

/// 2 e(g) / n.
double rayleigh_lower_bound(const Graph& g);

/// ||A x - rho x||_2 evaluated directly.
double eigen_residual(const Graph& g, const std::vector<double>& x, double rho);

struct BalanceReport {
  std::array<int, 3> sizes{};
  double rho = 0.0;
  double x_apex = 0.0;
  std::array<double, 3> part_value{};      // mean entry per part
  std::array<double, 3> closed_form{};     // (rho + 1) / (rho + n_i) * x_apex
  double within_part_spread = 0.0;         // max |x_v - x_w| over v, w in one part
  double closed_form_error = 0.0;          // max_i |part_value - closed_form|
  double system_residual = 0.0;            // max residual of the per-part eigen-equations
  std::optional<double> sign_value;        // (n1 - n3 - 1) rho - n3 when n1 >= n3 + 2
  bool parts_equal = false;
  bool closed_form_ok = false;
  bool system_ok = false;
  bool sign_ok = true;                     // vacuous when sign_value is empty

  bool ok() const { return parts_equal && closed_form_ok && system_ok && sign_ok; }
};

/// Perron vector of K_1 + K_3(n1, n2, n3) checked against the per-part
/// closed form. The apex is vertex 0, then the parts in order.
BalanceReport eigenvector_balance_check(int n1, int n2, int n3, double tolerance = 1e-8,
                                        const SpectralOptions& options = {});

struct SpectralComparison {
  int n = 0;
  double rho_turan3 = 0.0;
  double rho_turan2 = 0.0;
  double rho_gn = 0.0;
  double rayleigh_gn = 0.0;          // 2 e(G(n)) / n
  double lower_bound_gn = 0.0;       // 2n/3 + 2/3 - 2/n
  bool turan3_below_gn = false;      // rho(T_{n,3}) < rho(G(n))
  bool turan2_below_turan3 = false;  // rho(T_{n,2}) < rho(T_{n,3})
  bool rayleigh_holds = false;       // 2e/n <= rho(G(n)) + tol
  bool lower_bound_holds = false;    // rho(G(n)) >= 2n/3 + 2/3 - 2/n
};

/// Spectral radii of T_{n,3}, T_{n,2} and G(n) with the strict comparisons
/// used against them (6 <= n <= 512).
SpectralComparison spectral_comparisons(int n, const SpectralOptions& options = {});

}  // namespace sqturan
