#include <chrono>
#include <cmath>

#include "engine_kernels.hpp"
#include "hjfilter/engine.hpp"

namespace hj {

namespace {

// One splitting sweep over n_lines contiguous lines of length len (row-major
// block): per-line indicators, one scalar eps over the union of the lines'
// flagged sets, then the filtered update line by line. Lines are independent,
// so the driver parallelizes across them and keeps each line serial inside.
struct SweepResult {
  double eps = 0.0;
  int n_phi_zero = 0;
};

SweepResult sweep(const std::vector<double>& a, std::vector<double>& out, int n_lines, int len,
                  double dx, double dt, const SchemeSet& schemes, const FilterFunction& filter,
                  const SolverConfig& config, const IndicatorConfig& icfg,
                  std::vector<IndicatorState>& ws, std::vector<double>& line_eps, Exec exec) {
  for_each_node(exec, n_lines, [&](int line) {
    std::span<const double> u(a.data() + static_cast<size_t>(line) * len, len);
    compute_indicators(u, dx, icfg, ws[line], Exec::serial);
    line_eps[line] =
        epsilon_n(u, dx, dt / dx, config.K, schemes.mono, schemes.H, ws[line].phi, Exec::serial);
  });

  SweepResult res;
  for (int line = 0; line < n_lines; ++line) {
    res.eps = std::max(res.eps, line_eps[line]);
    res.n_phi_zero += ws[line].n_flagged;
  }

  double whole_max = 0.0;
  for (double v : a) whole_max = std::max(whole_max, std::abs(v));
  double floor = detail::resolve_floor(config, whole_max);
  bool active = res.eps > floor;

  for_each_node(exec, n_lines, [&](int line) {
    std::span<const double> u(a.data() + static_cast<size_t>(line) * len, len);
    std::span<double> o(out.data() + static_cast<size_t>(line) * len, len);
    detail::filtered_line_update(u, o, dx, dt, schemes, filter, res.eps, active,
                                 ws[line].phi.data(), nullptr, Exec::serial);
  });
  return res;
}

void transpose(const std::vector<double>& a, std::vector<double>& out, int rows, int cols) {
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out[static_cast<size_t>(c) * rows + r] =
        a[static_cast<size_t>(r) * cols + c];
}

double lipschitz_2d(const std::vector<double>& u, int nx, int ny, double dx, double dy) {
  double m = 0.0;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      size_t j = static_cast<size_t>(iy) * nx + ix;
      size_t jx = static_cast<size_t>(iy) * nx + (ix + 1 == nx ? 0 : ix + 1);
      size_t jy = static_cast<size_t>(iy + 1 == ny ? 0 : iy + 1) * nx + ix;
      m = std::max(m, std::abs(u[jx] - u[j]) / dx);
      m = std::max(m, std::abs(u[jy] - u[j]) / dy);
    }
  }
  return m;
}

}  // namespace

RunResult2D run_2d(const Problem2D& problem, const RunOptions& options) {
  const Grid1D& gx = problem.grid.gx;
  const Grid1D& gy = problem.grid.gy;
  int nx = gx.n, ny = gy.n;
  double dx = gx.dx(), dy = gy.dx();
  TimeGrid tg(problem.T, problem.lambda, dx);
  options.config.validate();
  if (!problem.schemes_x.mono.cfl_ok(problem.lambda) ||
      !problem.schemes_y.mono.cfl_ok(problem.lambda * dx / dy))
    throw std::invalid_argument("run_2d: lambda violates a per-axis CFL bound");

  std::vector<double> u(static_cast<size_t>(nx) * ny);
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix)
      u[static_cast<size_t>(iy) * nx + ix] = problem.v0(gx.x(ix), gy.x(iy));

  SolverConfig config = options.config;
  IndicatorConfig icfg{config.sigma, config.M, config.use_mapping, config.use_phi_tilde,
                       config.B ? *config.B : std::numeric_limits<double>::infinity()};

  std::vector<double> buf_a(u.size()), buf_b(u.size()), buf_c(u.size());
  std::vector<IndicatorState> ws_x(ny), ws_y(nx);
  std::vector<double> eps_x(ny), eps_y(nx);

  RunResult2D result{State2D{problem.grid, 0.0, u}, {}, 0.0, 0.0, tg.n_steps};
  result.steps.reserve(tg.n_steps);

  auto t_begin = std::chrono::steady_clock::now();
  for (int k = 0; k < tg.n_steps; ++k) {
    double dt = tg.step_dt(k);
    SweepDiagnostics diag;

    // x-sweep: rows are contiguous in the row-major layout.
    SweepResult sx = sweep(u, buf_a, ny, nx, dx, dt, problem.schemes_x, options.filter, config,
                           icfg, ws_x, eps_x, options.exec);
    diag.eps_x = sx.eps;
    diag.n_phi_zero_x = sx.n_phi_zero;

    // y-sweep on the transposed block so columns become contiguous lines.
    transpose(buf_a, buf_b, ny, nx);
    SweepResult sy = sweep(buf_b, buf_c, nx, ny, dy, dt, problem.schemes_y, options.filter,
                           config, icfg, ws_y, eps_y, options.exec);
    diag.eps_y = sy.eps;
    diag.n_phi_zero_y = sy.n_phi_zero;
    transpose(buf_c, u, nx, ny);

    bool finite = true;
    for (size_t j = 0; j < u.size() && finite; ++j) finite = std::isfinite(u[j]);
    if (!finite) throw BlowupError(k);

    diag.lipschitz = lipschitz_2d(u, nx, ny, dx, dy);
    result.max_eps_over_dx =
        std::max({result.max_eps_over_dx, diag.eps_x / dx, diag.eps_y / dy});
    result.steps.push_back(diag);
  }
  auto t_end = std::chrono::steady_clock::now();

  result.wall_seconds = std::chrono::duration<double>(t_end - t_begin).count();
  result.state = State2D{problem.grid, problem.T, std::move(u)};
  return result;
}

}  // namespace hj
