// Shared helpers for the unit tests: deterministic random data, least-squares
// slopes on log-log ladders, and grid sampling shortcuts.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "hjfilter/grid.hpp"

namespace testutil {

inline std::vector<double> sample(const hj::Grid1D& g, const std::function<double(double)>& f) {
  std::vector<double> u(g.n);
  for (int j = 0; j < g.n; ++j) u[j] = f(g.x(j));
  return u;
}

// Smooth periodic noise: a short random trig sum, bounded slopes.
inline std::vector<double> random_periodic(int n, std::mt19937_64& rng, double amp = 1.0) {
  std::uniform_real_distribution<double> ph(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> co(-1.0, 1.0);
  double a1 = co(rng), a2 = co(rng), a3 = co(rng);
  double p1 = ph(rng), p2 = ph(rng), p3 = ph(rng);
  std::vector<double> u(n);
  for (int j = 0; j < n; ++j) {
    double x = 2.0 * M_PI * j / n;
    u[j] = amp * (a1 * std::sin(x + p1) + 0.5 * a2 * std::sin(2.0 * x + p2) +
                  0.25 * a3 * std::sin(3.0 * x + p3));
  }
  return u;
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(std::span<const double> x, std::span<const double> y) {
  int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace testutil
