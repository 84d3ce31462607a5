#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hjfilter/analysis.hpp"
#include "hjfilter/engine.hpp"

namespace hj {

// A benchmark configuration: domain, datum, hamiltonian, horizon, CFL ratio,
// scheme defaults, refinement ladder, and how the reference solution is
// produced. All values are frozen; the CLI lets flags override tunables only.
struct Experiment {
  std::string id;
  std::string description;
  bool two_d = false;

  double x_min = 0.0, x_max = 1.0;
  std::function<double(double)> v0;             // 1D datum
  std::function<double(double, double)> v0_2d;  // 2D datum (when two_d)

  std::string hamiltonian;  // catalog name (per-axis component when two_d)
  double T = 0.0;
  double lambda = 0.0;

  std::string monotone;  // "eik" | "cu" | "lf"
  double lf_theta = 1.0;
  std::string highorder;       // default high-order partner: "hc" | "lwr" | "lw4"
  double fixed_eps_mult = 10;  // eps/dx used by the fixed-eps comparison runs

  std::vector<int> refinements;

  std::string reference;  // "transport" | "hopf_lax" | "ball_min" | "fine_grid"
  int n_ref = 0;          // fine-grid reference resolution
  std::vector<double> exclude_points;  // singular points for local error norms
  double exclude_radius = 0.0;
};

const Experiment& experiment(const std::string& id);  // throws for unknown ids
std::vector<std::string> experiment_ids();

// Scheme selector, e.g. "AF-HC", "F-LWR", "LW4", "M".
struct SchemeSelector {
  RunMode mode;
  std::string high;   // "" for monotone-only
  std::string label;  // canonical spelling for reports
};

SchemeSelector parse_scheme(const std::string& text);
std::string default_scheme(const Experiment& e);  // "AF-" + default partner

// Assemble runnable problems at one refinement level.
Problem1D make_problem(const Experiment& e, int n_x, const SchemeSelector& s);
Problem2D make_problem_2d(const Experiment& e, int n, const SchemeSelector& s);

// Reference values on a grid at time e.T (1D) — fine-grid experiments need a
// precomputed reference passed in so ladders can share one long run.
std::vector<double> reference_on_grid(const Experiment& e, const Grid1D& grid,
                                      const FineGridReference* fine = nullptr);
std::vector<double> reference_on_grid_2d(const Experiment& e, const Grid2D& grid);

// The fine run backing "fine_grid" references (uses the experiment's default
// AF pairing with the lw4 partner).
FineGridReference make_fine_reference(const Experiment& e, Exec exec = Exec::parallel);

}  // namespace hj
