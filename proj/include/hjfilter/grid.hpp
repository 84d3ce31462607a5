#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hj {

// Uniform periodic grid on [x_min, x_max): node j sits at x_min + j*dx for
// j = 0..n-1 and index arithmetic wraps modulo n. Five nodes is the minimum
// because the widest stencil (and the smoothness-indicator window) spans 5.
struct Grid1D {
  double x_min;
  double x_max;
  int n;

  Grid1D(double a, double b, int n_cells) : x_min(a), x_max(b), n(n_cells) {
    if (!(b > a)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
    if (n_cells < 5) throw std::invalid_argument("Grid1D: need at least 5 nodes");
  }

  double dx() const { return (x_max - x_min) / n; }
  double x(int j) const { return x_min + j * dx(); }
  int wrap(int j) const {
    int m = j % n;
    return m < 0 ? m + n : m;
  }
  // Wrap a real coordinate into [x_min, x_max).
  double wrap_x(double xv) const {
    double w = x_max - x_min;
    double r = std::fmod(xv - x_min, w);
    if (r < 0) r += w;
    return x_min + r;
  }
};

// Time discretization: dt = lambda*dx and the smallest step count N with
// N*dt >= T. When T/dt is not an integer the final step is truncated to
// dt' = T - (N-1)*dt so every run lands exactly on T; lambda' = dt'/dx is
// threaded through all lambda-dependent formulas for that step.
struct TimeGrid {
  double T;
  double lambda;
  double dt;
  int n_steps;
  bool exact_division;

  TimeGrid(double T_, double lambda_, double dx) : T(T_), lambda(lambda_), dt(lambda_ * dx) {
    if (!(T_ > 0.0)) throw std::invalid_argument("TimeGrid: T must be positive");
    if (!(lambda_ > 0.0)) throw std::invalid_argument("TimeGrid: lambda must be positive");
    double q = T / dt;
    double r = std::round(q);
    exact_division = std::abs(q - r) <= 1e-9 * std::max(1.0, q);
    n_steps = exact_division ? static_cast<int>(r) : static_cast<int>(std::ceil(q));
    if (n_steps < 1) n_steps = 1;
  }

  // dt of 0-based step k; only the last step can be truncated.
  double step_dt(int k) const {
    if (exact_division || k + 1 < n_steps) return dt;
    return T - (n_steps - 1) * dt;
  }
};

// Tunables of the adaptive filtered update. Defaults follow the benchmark
// setup: K = 1, sigma = 1, M = 0.1, mapped indicators, no curvature cap.
struct SolverConfig {
  double K = 1.0;      // epsilon amplification, must stay > 1/2
  double sigma = 1.0;  // indicator regularization weight (>= 0), scaled by dx^2
  double M = 0.1;      // phi threshold, in (0, 1/2)
  bool use_mapping = true;
  bool use_phi_tilde = false;       // AND a curvature cap |D2 u| < B into phi
  std::optional<double> B;          // cap; unset -> 100 * max |D2 u0| at run start
  std::optional<double> eps_floor;  // unset -> 1e-14 * (1 + max|u^n|) per step

  void validate() const {
    if (!(K > 0.5)) throw std::invalid_argument("SolverConfig: K must exceed 1/2");
    if (!(sigma >= 0.0)) throw std::invalid_argument("SolverConfig: sigma must be >= 0");
    if (!(M > 0.0 && M < 0.5)) throw std::invalid_argument("SolverConfig: M must lie in (0, 1/2)");
    if (B && !(*B > 0.0)) throw std::invalid_argument("SolverConfig: B must be positive");
    if (eps_floor && !(*eps_floor >= 0.0))
      throw std::invalid_argument("SolverConfig: eps_floor must be >= 0");
  }
};

struct SolutionState {
  Grid1D grid;
  double t = 0.0;
  std::vector<double> u;

  SolutionState(Grid1D g, std::vector<double> values, double time = 0.0)
      : grid(g), t(time), u(std::move(values)) {
    if (static_cast<int>(u.size()) != grid.n)
      throw std::invalid_argument("SolutionState: value count must match grid");
  }
};

// Periodic one-sided/central differences. j may be any node index; neighbors
// wrap around the domain ends.
inline double d_plus(std::span<const double> u, int j, double dx) {
  int n = static_cast<int>(u.size());
  int jp = j + 1 == n ? 0 : j + 1;
  return (u[jp] - u[j]) / dx;
}

inline double d_minus(std::span<const double> u, int j, double dx) {
  int n = static_cast<int>(u.size());
  int jm = j == 0 ? n - 1 : j - 1;
  return (u[j] - u[jm]) / dx;
}

inline double d_central(std::span<const double> u, int j, double dx) {
  int n = static_cast<int>(u.size());
  int jp = j + 1 == n ? 0 : j + 1;
  int jm = j == 0 ? n - 1 : j - 1;
  return (u[jp] - u[jm]) / (2.0 * dx);
}

inline double second_difference(std::span<const double> u, int j, double dx) {
  int n = static_cast<int>(u.size());
  int jp = j + 1 == n ? 0 : j + 1;
  int jm = j == 0 ? n - 1 : j - 1;
  return (u[jp] - 2.0 * u[j] + u[jm]) / (dx * dx);
}

inline double max_abs(std::span<const double> u) {
  double m = 0.0;
  for (double v : u) m = std::max(m, std::abs(v));
  return m;
}

// Discrete Lipschitz constant max_j |u_{j+1} - u_j| / dx (periodic).
inline double lipschitz_estimate(std::span<const double> u, double dx) {
  int n = static_cast<int>(u.size());
  double m = 0.0;
  for (int j = 0; j < n; ++j) {
    int jp = j + 1 == n ? 0 : j + 1;
    m = std::max(m, std::abs(u[jp] - u[j]));
  }
  return m / dx;
}

}  // namespace hj
