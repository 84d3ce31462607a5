#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hjfilter/engine.hpp"
#include "hjfilter/grid.hpp"
#include "hjfilter/hamiltonian.hpp"

namespace hj {

// Exact solution of u_t + u_x = 0 with periodic extension of v0.
double exact_transport(const std::function<double(double)>& v0, double x_min, double x_max,
                       double t, double x);

// Hopf-Lax value min_a [v0(x - a t) + t L(a)] over a in [a_lo, a_hi]
// intersected with the conjugate's support. v0 is extended periodically over
// [x_min, x_max). Coarse scan over n_coarse samples, then golden-section
// refinement of every local basin down to bracket width 1e-10.
double hopf_lax_value(const std::function<double(double)>& v0, double x_min, double x_max,
                      const Legendre& L, double t, double x, double a_lo = -5.0,
                      double a_hi = 5.0, int n_coarse = 2001);

// Eikonal solution min_{|y - x| <= t} v0(y), same scan-and-refine machinery.
double ball_min_value(const std::function<double(double)>& v0, double x_min, double x_max,
                      double t, double x, int n_coarse = 2001);

// Fine-grid self-reference: a run on n_ref nodes wrapped in a periodic
// piecewise-cubic nodal interpolant (exact at nodes, so aligned coarse grids
// read back nodal values).
struct FineGridReference {
  Grid1D grid;
  std::vector<double> u;
  double value(double x) const;
};

FineGridReference fine_grid_reference(const Problem1D& problem, int n_ref,
                                      const RunOptions& options);

// Discrete error norms: max and cell-weighted l1 (cell_volume = dx in 1D,
// dx*dy in 2D).
struct ErrorPair {
  double linf;
  double l1;
};

ErrorPair errors(std::span<const double> u, std::span<const double> ref, double cell_volume);

// Same, restricted to nodes farther than `radius` from every point in
// `exclude` (distances measured periodically). Throws if nothing is left.
ErrorPair local_errors_excluding(std::span<const double> u, std::span<const double> ref,
                                 const Grid1D& grid, std::span<const double> exclude,
                                 double radius);

// Convergence-history row; orders are log2(previous/current), NaN on the
// first row.
struct ErrorRow {
  int n_x = 0;
  int n_t = 0;
  double linf = 0.0, linf_ord = 0.0;
  double l1 = 0.0, l1_ord = 0.0;
  double cpu_s = 0.0;
};

struct ErrorReport {
  std::string scheme;
  std::vector<ErrorRow> rows;
};

// Fill the order columns of consecutive rows (first row orders become NaN).
void fill_orders(ErrorReport& report);

}  // namespace hj
