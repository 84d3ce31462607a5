#include "hjfilter/engine.hpp"

#include <chrono>
#include <cmath>

#include "engine_kernels.hpp"

namespace hj {

double epsilon_n(std::span<const double> u, double dx, double lambda, double K,
                 const MonotoneScheme& mono, const Hamiltonian& H,
                 std::span<const std::uint8_t> region, Exec exec) {
  int n = static_cast<int>(u.size());
  double m = max_over_nodes(exec, n, [&](int j) {
    if (!region.empty() && !region[j]) return 0.0;
    return detail::eps_term(u, j, dx, lambda, K, mono, H);
  });
  return m > 0.0 ? m : 0.0;  // empty flagged set -> 0
}

namespace {

StepDiagnostics filtered_step_common(std::span<const double> u, std::span<double> out, double dx,
                                     double dt, const SchemeSet& schemes,
                                     const FilterFunction& filter, double eps, double floor,
                                     const std::uint8_t* phi, int n_phi_zero, Exec exec,
                                     bool record_masks) {
  int n = static_cast<int>(u.size());
  StepDiagnostics diag;
  diag.eps_n = eps;
  diag.n_phi_zero = n_phi_zero;
  std::vector<std::uint8_t> activity(record_masks ? n : 0, 0);
  detail::filtered_line_update(u, out, dx, dt, schemes, filter, eps, eps > floor, phi,
                               record_masks ? activity.data() : nullptr, exec);
  diag.lipschitz = lipschitz_estimate(out, dx);
  if (record_masks) {
    diag.activity = std::move(activity);
    if (phi != nullptr)
      diag.phi.assign(phi, phi + n);
    else
      diag.phi.assign(n, 1);
  }
  return diag;
}

double max_curvature(std::span<const double> u, double dx) {
  double c = 0.0;
  int n = static_cast<int>(u.size());
  for (int j = 0; j < n; ++j) c = std::max(c, std::abs(second_difference(u, j, dx)));
  return c;
}

}  // namespace

StepDiagnostics af_step(std::span<const double> u, std::span<double> out, double dx, double dt,
                        const SchemeSet& schemes, const FilterFunction& filter,
                        const SolverConfig& config, IndicatorState& ind, Exec exec,
                        bool record_masks) {
  config.validate();
  IndicatorConfig icfg{config.sigma, config.M, config.use_mapping, config.use_phi_tilde,
                       config.B ? *config.B : std::numeric_limits<double>::infinity()};
  if (config.use_phi_tilde && !config.B)
    icfg.B = 100.0 * max_curvature(u, dx);  // standalone step: cap from the data it sees
  compute_indicators(u, dx, icfg, ind, exec);
  double eps = epsilon_n(u, dx, dt / dx, config.K, schemes.mono, schemes.H, ind.phi, exec);
  double floor = detail::resolve_floor(config, max_abs(u));
  return filtered_step_common(u, out, dx, dt, schemes, filter, eps, floor, ind.phi.data(),
                              ind.n_flagged, exec, record_masks);
}

StepDiagnostics basic_filtered_step(std::span<const double> u, std::span<double> out, double dx,
                                    double dt, const SchemeSet& schemes,
                                    const FilterFunction& filter, double eps,
                                    const SolverConfig& config, Exec exec, bool record_masks) {
  double floor = detail::resolve_floor(config, max_abs(u));
  return filtered_step_common(u, out, dx, dt, schemes, filter, eps, floor, nullptr, 0, exec,
                              record_masks);
}

RunResult run(const Problem1D& problem, const RunOptions& options) {
  const Grid1D& grid = problem.grid;
  double dx = grid.dx();
  TimeGrid tg(problem.T, problem.lambda, dx);
  options.config.validate();
  if (!problem.schemes.mono.cfl_ok(problem.lambda))
    throw std::invalid_argument("run: lambda " + std::to_string(problem.lambda) +
                                " violates the CFL bound of " + problem.schemes.mono.label);

  std::vector<double> u(grid.n), next(grid.n);
  for (int j = 0; j < grid.n; ++j) u[j] = problem.v0(grid.x(j));

  SolverConfig config = options.config;
  if (config.use_phi_tilde && !config.B) config.B = 100.0 * max_curvature(u, dx);

  RunResult result{
      SolutionState(grid, u, 0.0), {}, lipschitz_estimate(u, dx), 0.0, 0.0, tg.n_steps};
  result.steps.reserve(tg.n_steps);
  IndicatorState ind;

  auto t_begin = std::chrono::steady_clock::now();
  for (int k = 0; k < tg.n_steps; ++k) {
    double dt = tg.step_dt(k);
    StepDiagnostics diag;
    switch (options.mode) {
      case RunMode::adaptive:
        diag = af_step(u, next, dx, dt, problem.schemes, options.filter, config, ind,
                       options.exec, options.record_masks);
        break;
      case RunMode::fixed_eps:
        diag = basic_filtered_step(u, next, dx, dt, problem.schemes, options.filter,
                                   options.fixed_eps, config, options.exec, options.record_masks);
        break;
      case RunMode::monotone_only: {
        monotone_step(u, next, dx, dt, problem.schemes.mono, options.exec);
        diag.lipschitz = lipschitz_estimate(next, dx);
        if (options.record_masks) {
          diag.phi.assign(grid.n, 1);
          diag.activity.assign(grid.n, 0);
        }
        break;
      }
      case RunMode::highorder_only: {
        for_each_node(options.exec, grid.n, [&](int j) {
          next[j] =
              u[j] - dt * detail::high_at(u, j, dx, dt, problem.schemes.high, problem.schemes.H);
        });
        diag.lipschitz = lipschitz_estimate(next, dx);
        if (options.record_masks) {
          diag.phi.assign(grid.n, 1);
          diag.activity.assign(grid.n, 1);
        }
        break;
      }
    }
    u.swap(next);

    bool finite = true;
    for (int j = 0; j < grid.n && finite; ++j) finite = std::isfinite(u[j]);
    if (!finite) throw BlowupError(k);

    result.max_eps_over_dx = std::max(result.max_eps_over_dx, diag.eps_n / dx);
    result.steps.push_back(std::move(diag));
  }
  auto t_end = std::chrono::steady_clock::now();

  result.wall_seconds = std::chrono::duration<double>(t_end - t_begin).count();
  result.state = SolutionState(grid, std::move(u), problem.T);
  return result;
}

}  // namespace hj
