// Internal per-node kernels shared by the 1D engine and the 2D splitting
// driver. Everything here is pure per-node arithmetic; the drivers decide
// serial vs parallel execution.
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "hjfilter/engine.hpp"

namespace hj::detail {

inline double eps_term(std::span<const double> u, int j, double dx, double lambda, double K,
                       const MonotoneScheme& mono, const Hamiltonian& H) {
  double du = d_central(u, j, dx);
  double dp = d_plus(u, j, dx);
  double dm = d_minus(u, j, dx);
  double hp = H.eval(dp), hm = H.eval(dm);
  double t1 = H.eval(du) - H.eval(du - lambda * (hp - hm));
  double t2 = mono.h(du, dp) - mono.h(du, dm);
  double t3 = mono.h(dp, du) - mono.h(dm, du);
  return K * std::abs(t1 + t2 - t3);
}

// High-order hamiltonian at node j; interior windows alias the state
// directly, wrap-around nodes go through a stack copy.
inline double high_at(std::span<const double> u, int j, double dx, double dt,
                      const HighOrderScheme& high, const Hamiltonian& H) {
  int n = static_cast<int>(u.size());
  int k = high.stencil_radius;
  if (j >= k && j + k < n) return high.apply(u.subspan(j - k, 2 * k + 1), dx, dt, H);
  double w[5];
  for (int m = -k; m <= k; ++m) {
    int idx = j + m;
    idx = idx < 0 ? idx + n : (idx >= n ? idx - n : idx);
    w[m + k] = u[idx];
  }
  return high.apply(std::span<const double>(w, 2 * k + 1), dx, dt, H);
}

inline double resolve_floor(const SolverConfig& config, double max_abs_u) {
  if (config.eps_floor) return *config.eps_floor;
  return 1e-14 * (1.0 + max_abs_u);
}

// Filtered update of one line already holding eps and phi; phi == nullptr
// means phi == 1 everywhere. Purely per-node, safe to drive in parallel.
inline void filtered_line_update(std::span<const double> u, std::span<double> out, double dx,
                                 double dt, const SchemeSet& schemes, const FilterFunction& filter,
                                 double eps, bool active, const std::uint8_t* phi,
                                 std::uint8_t* activity, Exec exec) {
  int n = static_cast<int>(u.size());
  for_each_node(exec, n, [&](int j) {
    double sm = u[j] - dt * schemes.mono.h(d_minus(u, j, dx), d_plus(u, j, dx));
    bool here = active && (phi == nullptr || phi[j]);
    if (here) {
      double sa = u[j] - dt * high_at(u, j, dx, dt, schemes.high, schemes.H);
      double scale = eps * dt;
      out[j] = sm + scale * filter.F((sa - sm) / scale);
      if (activity != nullptr) activity[j] = std::abs(sa - sm) <= scale ? 1 : 0;
    } else {
      out[j] = sm;
      if (activity != nullptr) activity[j] = 0;
    }
  });
}

}  // namespace hj::detail
