#include "hjfilter/experiments.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hj {

namespace {

constexpr double kPi = 3.14159265358979323846;

double bump4(double x) {
  double b = std::max(1.0 - x * x, 0.0);
  return b * b * b * b;
}

double two_peaks(double x) {
  if (x >= -1.0 && x <= 1.0) {
    double l = (1.0 - x) * (1.0 - x), r = (1.0 + x) * (1.0 + x);
    return std::min(l, r);
  }
  if (x >= 2.0 && x <= 3.0) {
    double s = std::sin(kPi * (x - 2.0));
    return s * s;
  }
  return 0.0;
}

std::vector<Experiment> build_registry() {
  std::vector<Experiment> reg;

  {
    Experiment e;
    e.id = "ex1a";
    e.description = "linear transport of a smooth sine profile";
    e.x_min = -2.0; e.x_max = 2.0;
    e.v0 = [](double x) { return std::sin(kPi * x); };
    e.hamiltonian = "transport";
    e.T = 0.9; e.lambda = 0.9;
    e.monotone = "cu"; e.highorder = "hc"; e.fixed_eps_mult = 5.0;
    e.refinements = {40, 80, 160, 320};
    e.reference = "transport";
    reg.push_back(std::move(e));
  }
  {
    Experiment e;
    e.id = "ex1b";
    e.description = "linear transport of two peaks (one kinked, one C2)";
    e.x_min = -1.5; e.x_max = 3.5;
    e.v0 = two_peaks;
    e.hamiltonian = "transport";
    e.T = 2.0; e.lambda = 0.4;
    e.monotone = "cu"; e.highorder = "hc"; e.fixed_eps_mult = 10.0;
    e.refinements = {50, 100, 200, 400};
    e.reference = "transport";
    reg.push_back(std::move(e));
  }
  {
    Experiment e;
    e.id = "ex2a";
    e.description = "eikonal evolution of a positive C3 bump";
    e.x_min = -2.0; e.x_max = 2.0;
    e.v0 = [](double x) { return bump4(x); };
    e.hamiltonian = "eikonal";
    e.T = 0.3; e.lambda = 0.375;
    e.monotone = "eik"; e.highorder = "lwr"; e.fixed_eps_mult = 5.0;
    e.refinements = {40, 80, 160, 320};
    e.reference = "ball_min";
    reg.push_back(std::move(e));
  }
  {
    Experiment e;
    e.id = "ex2b";
    e.description = "eikonal evolution of a negative C3 bump";
    e.x_min = -2.0; e.x_max = 2.0;
    e.v0 = [](double x) { return -bump4(x); };
    e.hamiltonian = "eikonal";
    e.T = 0.3; e.lambda = 0.375;
    e.monotone = "eik"; e.highorder = "lwr"; e.fixed_eps_mult = 5.0;
    e.refinements = {40, 80, 160, 320};
    e.reference = "ball_min";
    reg.push_back(std::move(e));
  }
  {
    Experiment e;
    e.id = "ex3_regular";
    e.description = "shifted Burgers with cosine datum, pre-singularity horizon";
    e.x_min = 0.0; e.x_max = 2.0;
    e.v0 = [](double x) { return -std::cos(kPi * x); };
    e.hamiltonian = "burgers_shift";
    e.T = 4.0 / (5.0 * kPi * kPi); e.lambda = 2.0 / (kPi * kPi);
    e.monotone = "cu"; e.highorder = "lwr"; e.fixed_eps_mult = 10.0;
    e.refinements = {40, 80, 160, 320};
    e.reference = "hopf_lax";
    reg.push_back(std::move(e));
  }
  {
    Experiment e;
    e.id = "ex3_shock";
    e.description = "shifted Burgers past singularity formation";
    e.x_min = 0.0; e.x_max = 2.0;
    e.v0 = [](double x) { return -std::cos(kPi * x); };
    e.hamiltonian = "burgers_shift";
    e.T = 3.0 / (2.0 * kPi * kPi); e.lambda = 15.0 / (8.0 * kPi * kPi);
    e.monotone = "cu"; e.highorder = "lwr"; e.fixed_eps_mult = 10.0;
    e.refinements = {40, 80, 160, 320};
    e.reference = "hopf_lax";
    reg.push_back(std::move(e));
  }
  {
    Experiment e;
    e.id = "ex4";
    e.description = "nonconvex cosine hamiltonian; fine-grid self reference";
    e.x_min = -1.0; e.x_max = 1.0;
    e.v0 = [](double x) { return -std::cos(kPi * x); };
    e.hamiltonian = "nonconvex_cos";
    e.T = 3.0 / (2.0 * kPi * kPi); e.lambda = 0.31;
    e.monotone = "lf"; e.lf_theta = 1.0; e.highorder = "hc"; e.fixed_eps_mult = 10.0;
    e.refinements = {40, 80, 160, 320};
    e.reference = "fine_grid"; e.n_ref = 10240;
    e.exclude_points = {-0.895, 0.245};
    e.exclude_radius = 0.05;
    reg.push_back(std::move(e));
  }
  {
    Experiment e;
    e.id = "ex5_regular";
    e.description = "2D quadratic hamiltonian via splitting, smooth horizon";
    e.two_d = true;
    e.x_min = 0.0; e.x_max = 2.0;
    e.v0 = [](double s) { return -0.5 * std::cos(kPi * s); };  // per-axis part
    e.v0_2d = [](double x, double y) {
      return -0.5 * (std::cos(kPi * x) + std::cos(kPi * y));
    };
    e.hamiltonian = "quad_shift_2d_component";
    e.T = 4.0 / (5.0 * kPi * kPi); e.lambda = 4.0 / (5.0 * kPi * kPi);
    e.monotone = "cu"; e.highorder = "lwr"; e.fixed_eps_mult = 10.0;
    e.refinements = {20, 40, 80, 160};
    e.reference = "hopf_lax";
    reg.push_back(std::move(e));
  }
  {
    Experiment e;
    e.id = "ex5_shock";
    e.description = "2D quadratic hamiltonian via splitting, past singularity";
    e.two_d = true;
    e.x_min = 0.0; e.x_max = 2.0;
    e.v0 = [](double s) { return -0.5 * std::cos(kPi * s); };  // per-axis part
    e.v0_2d = [](double x, double y) {
      return -0.5 * (std::cos(kPi * x) + std::cos(kPi * y));
    };
    e.hamiltonian = "quad_shift_2d_component";
    e.T = 3.0 / (2.0 * kPi * kPi); e.lambda = 3.0 / (4.0 * kPi * kPi);
    e.monotone = "cu"; e.highorder = "lwr"; e.fixed_eps_mult = 10.0;
    e.refinements = {20, 40, 80, 160};
    e.reference = "hopf_lax";
    reg.push_back(std::move(e));
  }
  return reg;
}

const std::vector<Experiment>& registry() {
  static const std::vector<Experiment> reg = build_registry();
  return reg;
}

MonotoneScheme make_monotone(const Experiment& e, const Hamiltonian& H) {
  if (e.monotone == "eik") return monotone::eikonal_max();
  if (e.monotone == "cu") return monotone::central_upwind(H);
  if (e.monotone == "lf") return monotone::lax_friedrichs(H, e.lf_theta);
  throw std::invalid_argument("experiment " + e.id + ": unknown monotone tag " + e.monotone);
}

}  // namespace

const Experiment& experiment(const std::string& id) {
  for (const Experiment& e : registry())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown experiment: " + id);
}

std::vector<std::string> experiment_ids() {
  std::vector<std::string> ids;
  for (const Experiment& e : registry()) ids.push_back(e.id);
  return ids;
}

SchemeSelector parse_scheme(const std::string& text) {
  static const std::map<std::string, std::string> high_names = {
      {"HC", "hc"}, {"LW", "lw"}, {"LWR", "lwr"}, {"LW4", "lw4"}, {"LW4ORD", "lw4"}};
  std::string up;
  for (char c : text) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));

  if (up == "M" || up == "MONO" || up == "MONOTONE") return {RunMode::monotone_only, "", "M"};

  auto strip = [&](const std::string& prefix, RunMode mode) -> SchemeSelector {
    std::string rest = up.substr(prefix.size());
    auto it = high_names.find(rest);
    if (it == high_names.end())
      throw std::invalid_argument("unknown scheme selector: " + text);
    std::string canon = it->first == "LW4ORD" ? "LW4" : it->first;
    std::string label = prefix.empty() ? canon : prefix + canon;
    return {mode, it->second, label};
  };
  if (up.rfind("AF-", 0) == 0) return strip("AF-", RunMode::adaptive);
  if (up.rfind("F-", 0) == 0) return strip("F-", RunMode::fixed_eps);
  return strip("", RunMode::highorder_only);
}

std::string default_scheme(const Experiment& e) {
  std::string h = e.highorder;
  for (char& c : h) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return "AF-" + h;
}

Problem1D make_problem(const Experiment& e, int n_x, const SchemeSelector& s) {
  if (e.two_d) throw std::invalid_argument("experiment " + e.id + " is two-dimensional");
  Hamiltonian H = hamiltonians::by_name(e.hamiltonian);
  MonotoneScheme mono = make_monotone(e, H);
  HighOrderScheme high = highorder::by_name(s.high.empty() ? e.highorder : s.high);
  return {Grid1D(e.x_min, e.x_max, n_x), e.v0, {mono, high, H}, e.T, e.lambda};
}

Problem2D make_problem_2d(const Experiment& e, int n, const SchemeSelector& s) {
  if (!e.two_d) throw std::invalid_argument("experiment " + e.id + " is one-dimensional");
  Hamiltonian H = hamiltonians::by_name(e.hamiltonian);
  MonotoneScheme mono = make_monotone(e, H);
  HighOrderScheme high = highorder::by_name(s.high.empty() ? e.highorder : s.high);
  Grid1D g(e.x_min, e.x_max, n);
  SchemeSet set{mono, high, H};
  return {Grid2D{g, g}, e.v0_2d, set, set, e.T, e.lambda};
}

std::vector<double> reference_on_grid(const Experiment& e, const Grid1D& grid,
                                      const FineGridReference* fine) {
  std::vector<double> ref(grid.n);
  if (e.reference == "transport") {
    for (int j = 0; j < grid.n; ++j)
      ref[j] = exact_transport(e.v0, e.x_min, e.x_max, e.T, grid.x(j));
  } else if (e.reference == "ball_min") {
    for (int j = 0; j < grid.n; ++j)
      ref[j] = ball_min_value(e.v0, e.x_min, e.x_max, e.T, grid.x(j));
  } else if (e.reference == "hopf_lax") {
    Legendre L = hamiltonians::legendre(e.hamiltonian);
    for (int j = 0; j < grid.n; ++j)
      ref[j] = hopf_lax_value(e.v0, e.x_min, e.x_max, L, e.T, grid.x(j));
  } else if (e.reference == "fine_grid") {
    if (fine == nullptr)
      throw std::invalid_argument("experiment " + e.id +
                                  " needs a precomputed fine-grid reference");
    for (int j = 0; j < grid.n; ++j) ref[j] = fine->value(grid.x(j));
  } else {
    throw std::invalid_argument("experiment " + e.id + ": unknown reference " + e.reference);
  }
  return ref;
}

std::vector<double> reference_on_grid_2d(const Experiment& e, const Grid2D& grid) {
  if (e.reference != "hopf_lax")
    throw std::invalid_argument("2D experiments use the per-axis hopf_lax reference");
  Legendre L = hamiltonians::legendre(e.hamiltonian);
  // The datum separates per axis (e.v0 holds the per-axis part), so the
  // solution is the sum of two 1D Hopf-Lax values; evaluate one minimization
  // per distinct coordinate.
  auto axis_values = [&](const Grid1D& g) {
    std::vector<double> m(g.n);
    for (int j = 0; j < g.n; ++j)
      m[j] = hopf_lax_value(e.v0, e.x_min, e.x_max, L, e.T, g.x(j));
    return m;
  };
  std::vector<double> mx = axis_values(grid.gx);
  std::vector<double> my = grid.gy.n == grid.gx.n && grid.gy.x_min == grid.gx.x_min
                               ? mx
                               : axis_values(grid.gy);
  std::vector<double> ref(static_cast<size_t>(grid.gx.n) * grid.gy.n);
  for (int iy = 0; iy < grid.gy.n; ++iy)
    for (int ix = 0; ix < grid.gx.n; ++ix)
      ref[static_cast<size_t>(iy) * grid.gx.n + ix] = mx[ix] + my[iy];
  return ref;
}

FineGridReference make_fine_reference(const Experiment& e, Exec exec) {
  if (e.reference != "fine_grid")
    throw std::invalid_argument("experiment " + e.id + " has no fine-grid reference");
  SchemeSelector s = parse_scheme("AF-LW4");
  int finest = e.refinements.empty() ? 5 : e.refinements.back();
  Problem1D p = make_problem(e, finest, s);
  RunOptions opts;
  opts.mode = RunMode::adaptive;
  opts.exec = exec;
  opts.record_masks = false;
  return fine_grid_reference(p, e.n_ref, opts);
}

}  // namespace hj
