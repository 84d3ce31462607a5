#include "hjfilter/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hj {

namespace {

double wrap_into(double x, double lo, double hi) {
  double w = hi - lo;
  double r = std::fmod(x - lo, w);
  if (r < 0) r += w;
  return lo + r;
}

// Golden-section minimization on [lo, hi] down to bracket width `tol`.
double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a); f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

// Coarse scan + refinement of every sampled local basin; robust against the
// multiple minima a periodic v0 produces.
double scan_refine(const std::function<double(double)>& f, double lo, double hi, int n_coarse) {
  if (!(hi > lo)) return f(lo);
  n_coarse = std::max(n_coarse, 3);
  std::vector<double> val(n_coarse);
  double h = (hi - lo) / (n_coarse - 1);
  for (int i = 0; i < n_coarse; ++i) val[i] = f(lo + i * h);
  double best = *std::min_element(val.begin(), val.end());
  double out = best;
  for (int i = 0; i < n_coarse; ++i) {
    bool local_min = (i == 0 || val[i] <= val[i - 1]) && (i + 1 == n_coarse || val[i] <= val[i + 1]);
    if (!local_min || val[i] > best + 1e-6 * (1.0 + std::abs(best))) continue;
    double a = lo + std::max(0, i - 1) * h;
    double b = lo + std::min(n_coarse - 1, i + 1) * h;
    out = std::min(out, golden_min(f, a, b, 1e-10));
  }
  return out;
}

}  // namespace

double exact_transport(const std::function<double(double)>& v0, double x_min, double x_max,
                       double t, double x) {
  return v0(wrap_into(x - t, x_min, x_max));
}

double hopf_lax_value(const std::function<double(double)>& v0, double x_min, double x_max,
                      const Legendre& L, double t, double x, double a_lo, double a_hi,
                      int n_coarse) {
  if (t < 0.0) throw std::invalid_argument("hopf_lax_value: t must be >= 0");
  if (t == 0.0) return v0(wrap_into(x, x_min, x_max));
  double lo = std::max(a_lo, L.q_lo);
  double hi = std::min(a_hi, L.q_hi);
  if (!(hi >= lo))
    throw std::invalid_argument("hopf_lax_value: empty admissible velocity interval");
  auto g = [&](double a) { return v0(wrap_into(x - a * t, x_min, x_max)) + t * L.eval(a); };
  if (hi == lo) return g(lo);  // point-supported conjugate (e.g. transport)
  return scan_refine(g, lo, hi, n_coarse);
}

double ball_min_value(const std::function<double(double)>& v0, double x_min, double x_max,
                      double t, double x, int n_coarse) {
  if (t < 0.0) throw std::invalid_argument("ball_min_value: t must be >= 0");
  auto g = [&](double y) { return v0(wrap_into(y, x_min, x_max)); };
  if (t == 0.0) return g(x);
  return scan_refine(g, x - t, x + t, n_coarse);
}

double FineGridReference::value(double x) const {
  // Periodic 4-point (cubic Lagrange) interpolation; exact at the nodes.
  double dx = grid.dx();
  double s_real = (x - grid.x_min) / dx;
  int j = static_cast<int>(std::floor(s_real));
  double s = s_real - j;
  auto at = [&](int m) { return u[grid.wrap(j + m)]; };
  double wm1 = -s * (s - 1.0) * (s - 2.0) / 6.0;
  double w0 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
  double w1 = -(s + 1.0) * s * (s - 2.0) / 2.0;
  double w2 = (s + 1.0) * s * (s - 1.0) / 6.0;
  return wm1 * at(-1) + w0 * at(0) + w1 * at(1) + w2 * at(2);
}

FineGridReference fine_grid_reference(const Problem1D& problem, int n_ref,
                                      const RunOptions& options) {
  if (n_ref < 8 * problem.grid.n)
    throw std::invalid_argument("fine_grid_reference: n_ref must be >= 8x the test grid");
  Problem1D fine = problem;
  fine.grid = Grid1D(problem.grid.x_min, problem.grid.x_max, n_ref);
  RunOptions opts = options;
  opts.record_masks = false;  // keep the long reference run lean
  RunResult res = run(fine, opts);
  return {fine.grid, std::move(res.state.u)};
}

ErrorPair errors(std::span<const double> u, std::span<const double> ref, double cell_volume) {
  if (u.size() != ref.size()) throw std::invalid_argument("errors: size mismatch");
  double linf = 0.0, l1 = 0.0;
  for (size_t j = 0; j < u.size(); ++j) {
    double e = std::abs(u[j] - ref[j]);
    linf = std::max(linf, e);
    l1 += e;
  }
  return {linf, cell_volume * l1};
}

ErrorPair local_errors_excluding(std::span<const double> u, std::span<const double> ref,
                                 const Grid1D& grid, std::span<const double> exclude,
                                 double radius) {
  if (u.size() != ref.size())
    throw std::invalid_argument("local_errors_excluding: size mismatch");
  double width = grid.x_max - grid.x_min;
  double linf = 0.0, l1 = 0.0;
  int kept = 0;
  for (int j = 0; j < grid.n; ++j) {
    double x = grid.x(j);
    bool excluded = false;
    for (double p : exclude) {
      double d = std::abs(x - p);
      d = std::min(d, width - d);  // periodic distance
      if (d <= radius) {
        excluded = true;
        break;
      }
    }
    if (excluded) continue;
    double e = std::abs(u[j] - ref[j]);
    linf = std::max(linf, e);
    l1 += e;
    ++kept;
  }
  if (kept == 0)
    throw std::invalid_argument("local_errors_excluding: exclusion removed every node");
  return {linf, grid.dx() * l1};
}

void fill_orders(ErrorReport& report) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (size_t i = 0; i < report.rows.size(); ++i) {
    if (i == 0) {
      report.rows[i].linf_ord = nan;
      report.rows[i].l1_ord = nan;
    } else {
      report.rows[i].linf_ord = std::log2(report.rows[i - 1].linf / report.rows[i].linf);
      report.rows[i].l1_ord = std::log2(report.rows[i - 1].l1 / report.rows[i].l1);
    }
  }
}

}  // namespace hj
