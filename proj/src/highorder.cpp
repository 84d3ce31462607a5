#include "hjfilter/highorder.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hjfilter/grid.hpp"

namespace hj {

namespace highorder {

HighOrderScheme heun_centered() {
  auto apply = [](std::span<const double> w, double dx, double dt, const Hamiltonian& H) {
    // w = u_{j-2..j+2}; predictor values are needed only at j-1 and j+1,
    // the two nodes entering the corrector's central difference at j.
    auto central = [&](int m) { return (w[m + 1] - w[m - 1]) / (2.0 * dx); };
    double star_l = w[1] - dt * H.eval(central(1));
    double star_r = w[3] - dt * H.eval(central(3));
    double h1 = H.eval(central(2));
    double h2 = H.eval((star_r - star_l) / (2.0 * dx));
    return 0.5 * (h1 + h2);
  };
  return {2, 2, "hc", apply};
}

HighOrderScheme lax_wendroff() {
  auto apply = [](std::span<const double> w, double dx, double dt, const Hamiltonian& H) {
    double lam = dt / dx;
    double dp = (w[2] - w[1]) / dx;
    double dm = (w[1] - w[0]) / dx;
    return 0.5 * (H.eval(dp) + H.eval(dm) -
                  lam * H.deriv(0.5 * (dm + dp)) * (H.eval(dp) - H.eval(dm)));
  };
  return {1, 2, "lw", apply};
}

HighOrderScheme richtmyer() {
  auto apply = [](std::span<const double> w, double dx, double dt, const Hamiltonian& H) {
    double lam = dt / dx;
    double dp = (w[2] - w[1]) / dx;
    double dm = (w[1] - w[0]) / dx;
    return H.eval(0.5 * (dm + dp) - 0.5 * lam * (H.eval(dp) - H.eval(dm)));
  };
  return {1, 2, "lwr", apply};
}

HighOrderScheme lax_wendroff_4() {
  auto apply = [](std::span<const double> w, double dx, double dt, const Hamiltonian& H) {
    // Fourth-order one-step Taylor expansion: time derivatives of orders
    // 2..4 are rewritten as spatial derivatives of powers of H' times u_xx,
    // each discretized on the same 5-node window.
    double d4 = (w[0] - 8.0 * w[1] + 8.0 * w[3] - w[4]) / (12.0 * dx);
    double h1 = H.eval(d4);
    double hp = H.deriv(d4);
    double h2 = hp * hp * ((-w[0] + 16.0 * w[1] - 30.0 * w[2] + 16.0 * w[3] - w[4]) /
                           (12.0 * dx * dx));
    double cp = (w[4] - w[2]) / (2.0 * dx);   // central slope at j+1
    double cm = (w[2] - w[0]) / (2.0 * dx);   // central slope at j-1
    double cc = (w[3] - w[1]) / (2.0 * dx);   // central slope at j
    double sp = (w[4] - 2.0 * w[3] + w[2]) / (dx * dx);
    double sm = (w[2] - 2.0 * w[1] + w[0]) / (dx * dx);
    double sc = (w[3] - 2.0 * w[2] + w[1]) / (dx * dx);
    double ap = H.deriv(cp), am = H.deriv(cm), ac = H.deriv(cc);
    double h3 = (ap * ap * ap * sp - am * am * am * sm) / (2.0 * dx);
    double h4 = (ap * ap * ap * ap * sp - 2.0 * ac * ac * ac * ac * sc +
                 am * am * am * am * sm) / (dx * dx);
    return h1 - (dt / 2.0) * (h2 - (dt / 3.0) * (h3 - (dt / 4.0) * h4));
  };
  return {2, 4, "lw4", apply};
}

HighOrderScheme by_name(const std::string& name) {
  if (name == "hc") return heun_centered();
  if (name == "lw") return lax_wendroff();
  if (name == "lwr") return richtmyer();
  if (name == "lw4") return lax_wendroff_4();
  throw std::invalid_argument("unknown high-order scheme: " + name);
}

}  // namespace highorder

ConsistencyProbe consistency_probe(const HighOrderScheme& scheme, const Hamiltonian& H,
                                   const std::function<double(double, double)>& v, double t0,
                                   double lambda, std::span<const int> n_ladder, double x_min,
                                   double x_max) {
  ConsistencyProbe probe;
  int k = scheme.stencil_radius;
  for (int n : n_ladder) {
    Grid1D grid(x_min, x_max, n);
    double dx = grid.dx(), dt = lambda * dx;
    std::vector<double> u(n);
    for (int j = 0; j < n; ++j) u[j] = v(t0, grid.x(j));
    double res = 0.0;
    std::vector<double> w(2 * k + 1);
    for (int j = 0; j < n; ++j) {
      for (int m = -k; m <= k; ++m) w[m + k] = u[grid.wrap(j + m)];
      double stepped = u[j] - dt * scheme.apply(w, dx, dt, H);
      res = std::max(res, std::abs(v(t0 + dt, grid.x(j)) - stepped) / dt);
    }
    probe.dx.push_back(dx);
    probe.residual.push_back(res);
  }
  // Least-squares slope of log(residual) against log(dx).
  int m = static_cast<int>(probe.dx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    double lx = std::log(probe.dx[i]);
    double ly = std::log(std::max(probe.residual[i], 1e-300));
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  probe.slope = m > 1 ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : 0.0;
  return probe;
}

}  // namespace hj
