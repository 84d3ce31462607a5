#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hjfilter/filters.hpp"
#include "hjfilter/grid.hpp"
#include "hjfilter/hamiltonian.hpp"
#include "hjfilter/highorder.hpp"
#include "hjfilter/indicators.hpp"
#include "hjfilter/monotone.hpp"
#include "hjfilter/parallel.hpp"

namespace hj {

// Raised when a run produces a non-finite value; step is the 0-based index
// of the offending update.
struct BlowupError : std::runtime_error {
  int step;
  explicit BlowupError(int step_)
      : std::runtime_error("solution blew up at step " + std::to_string(step_)), step(step_) {}
};

struct SchemeSet {
  MonotoneScheme mono;
  HighOrderScheme high;
  Hamiltonian H;
};

enum class RunMode { adaptive, fixed_eps, monotone_only, highorder_only };

struct RunOptions {
  RunMode mode = RunMode::adaptive;
  double fixed_eps = 0.0;  // absolute epsilon for RunMode::fixed_eps
  FilterFunction filter = filters::f1();
  SolverConfig config{};
  Exec exec = Exec::parallel;
  bool record_masks = true;
};

struct StepDiagnostics {
  double eps_n = 0.0;        // threshold used by the filtered update
  double lipschitz = 0.0;    // max_j |u_{j+1}-u_j|/dx after the step
  int n_phi_zero = 0;        // nodes excluded from the regularity set
  std::vector<std::uint8_t> phi;       // regularity flags (when recorded)
  std::vector<std::uint8_t> activity;  // 1 where the high-order value survived the filter
};

struct RunResult {
  SolutionState state;
  std::vector<StepDiagnostics> steps;
  double lipschitz0 = 0.0;       // Lipschitz estimate of the initial datum
  double max_eps_over_dx = 0.0;  // max_n eps^n / dx over the whole run
  double wall_seconds = 0.0;
  int n_steps = 0;
};

// Regularity threshold: eps^n = K * max over the flagged set of
//   |H(Du) - H(Du - lam[H(D+u) - H(D-u)])
//    + [h(Du,D+u) - h(Du,D-u)] - [h(D+u,Du) - h(D-u,Du)]|
// with Du the central difference; 0 when the set is empty.
double epsilon_n(std::span<const double> u, double dx, double lambda, double K,
                 const MonotoneScheme& mono, const Hamiltonian& H,
                 std::span<const std::uint8_t> region, Exec exec = Exec::serial);

// One adaptive filtered step: indicators from u, eps^n over the flagged set,
// then out_j = S^M_j + phi_j * eps^n * dt * F((S^A_j - S^M_j)/(eps^n dt)).
// The filter is skipped entirely when eps^n falls at or below the floor
// (config.eps_floor, or 1e-14*(1+max|u|) when unset), making the step purely
// monotone. `ind` is caller-owned workspace reused across steps.
StepDiagnostics af_step(std::span<const double> u, std::span<double> out, double dx, double dt,
                        const SchemeSet& schemes, const FilterFunction& filter,
                        const SolverConfig& config, IndicatorState& ind,
                        Exec exec = Exec::serial, bool record_masks = false);

// Filtered step with phi == 1 everywhere and a caller-fixed eps (no
// indicator pass); eps <= floor again degrades to the monotone step.
StepDiagnostics basic_filtered_step(std::span<const double> u, std::span<double> out, double dx,
                                    double dt, const SchemeSet& schemes,
                                    const FilterFunction& filter, double eps,
                                    const SolverConfig& config, Exec exec = Exec::serial,
                                    bool record_masks = false);

// A 1D initial-value problem on a periodic grid.
struct Problem1D {
  Grid1D grid;
  std::function<double(double)> v0;
  SchemeSet schemes;
  double T;
  double lambda;
};

// Advance v0 samples to time T with dt = lambda*dx (final step truncated so
// the run lands exactly on T). Throws on CFL violation before stepping and
// BlowupError if a non-finite value appears.
RunResult run(const Problem1D& problem, const RunOptions& options);

// ------------------------------------------------------------------ 2D ----
// Dimensional splitting: each step applies a full 1D filtered update along
// x on every row, then along y on every column. eps^n is one scalar per
// sweep, maximized over the sweep's whole flagged set across all lines.
struct Grid2D {
  Grid1D gx, gy;
};

struct State2D {
  Grid2D grid;
  double t = 0.0;
  std::vector<double> u;  // row-major: u[iy*nx + ix]
};

struct Problem2D {
  Grid2D grid;
  std::function<double(double, double)> v0;
  SchemeSet schemes_x, schemes_y;
  double T;
  double lambda;
};

struct SweepDiagnostics {
  double eps_x = 0.0, eps_y = 0.0;
  int n_phi_zero_x = 0, n_phi_zero_y = 0;
  double lipschitz = 0.0;  // max one-sided difference quotient over both axes
};

struct RunResult2D {
  State2D state;
  std::vector<SweepDiagnostics> steps;
  double max_eps_over_dx = 0.0;
  double wall_seconds = 0.0;
  int n_steps = 0;
};

RunResult2D run_2d(const Problem2D& problem, const RunOptions& options);

}  // namespace hj
