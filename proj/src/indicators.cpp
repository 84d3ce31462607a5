#include "hjfilter/indicators.hpp"

#include <cmath>
#include <stdexcept>

namespace hj {

namespace {

inline double scaled_sq_second(std::span<const double> u, int m, double dx) {
  int n = static_cast<int>(u.size());
  int mp = m + 1 == n ? 0 : m + 1;
  int mm = m == 0 ? n - 1 : m - 1;
  double d = (u[mp] - 2.0 * u[m] + u[mm]) / dx;
  return d * d;
}

}  // namespace

BetaQuad beta_window(std::span<const double> u, int j, double dx) {
  int n = static_cast<int>(u.size());
  int jm = j == 0 ? n - 1 : j - 1;
  int jp = j + 1 == n ? 0 : j + 1;
  double s_prev = scaled_sq_second(u, jm, dx);
  double s_here = scaled_sq_second(u, j, dx);
  double s_next = scaled_sq_second(u, jp, dx);
  return {s_prev, s_here, s_here, s_next};
}

OmegaPair omegas(const BetaQuad& b, double dx, double sigma, bool mapped) {
  double reg = sigma * dx * dx;
  auto alpha = [reg](double beta) {
    double d = beta + reg;
    return 1.0 / (d * d);
  };
  double am0 = alpha(b.bm0), am1 = alpha(b.bm1);
  double ap0 = alpha(b.bp0), ap1 = alpha(b.bp1);
  OmegaPair o{am1 / (am0 + am1), ap0 / (ap0 + ap1)};
  if (mapped) {
    o.minus = map_g(o.minus);
    o.plus = map_g(o.plus);
  }
  return o;
}

void IndicatorState::resize(int n) {
  s.assign(n, 0.0);
  omega_minus.assign(n, 0.0);
  omega_plus.assign(n, 0.0);
  omega.assign(n, 0.0);
  phi.assign(n, 1);
  n_flagged = 0;
}

void compute_indicators(std::span<const double> u, double dx, const IndicatorConfig& cfg,
                        IndicatorState& out, Exec exec) {
  int n = static_cast<int>(u.size());
  if (static_cast<int>(out.s.size()) != n) out.resize(n);

  // Pass 1: one scaled second difference per node; every window entry below
  // is a lookup into this array, so each difference is computed exactly once.
  for_each_node(exec, n, [&](int m) { out.s[m] = scaled_sq_second(u, m, dx); });

  double reg = cfg.sigma * dx * dx;
  for_each_node(exec, n, [&](int j) {
    int jm = j == 0 ? n - 1 : j - 1;
    int jp = j + 1 == n ? 0 : j + 1;
    auto alpha = [reg](double beta) {
      double d = beta + reg;
      return 1.0 / (d * d);
    };
    double a_prev = alpha(out.s[jm]), a_here = alpha(out.s[j]), a_next = alpha(out.s[jp]);
    double wm = a_here / (a_prev + a_here);
    double wp = a_here / (a_here + a_next);
    if (cfg.mapped) {
      wm = map_g(wm);
      wp = map_g(wp);
    }
    out.omega_minus[j] = wm;
    out.omega_plus[j] = wp;
    double w = wm < wp ? wm : wp;
    out.omega[j] = w;
    bool regular = w >= cfg.M;
    if (cfg.phi_tilde && regular) regular = std::sqrt(out.s[j]) / dx < cfg.B;
    out.phi[j] = regular ? 1 : 0;
  });

  int flagged = 0;
  for (int j = 0; j < n; ++j) flagged += out.phi[j] == 0;
  out.n_flagged = flagged;
}

double undivided_difference(std::span<const double> f, int i) {
  if (i < 0 || i >= static_cast<int>(f.size()))
    throw std::invalid_argument("undivided_difference: order exceeds sample count");
  std::vector<double> t(f.begin(), f.begin() + i + 1);
  for (int level = 1; level <= i; ++level)
    for (int m = 0; m + level <= i; ++m) t[m] = t[m + 1] - t[m];
  return t[0];
}

long long binom_alt_sum(int i, int n) {
  if (i < 0 || n < 0 || n > i) throw std::invalid_argument("binom_alt_sum: need 0 <= n <= i");
  // C(i,j) running product; signs alternate ending at +C(i,n)*(+1)^0.
  long long sum = 0, c = 1;
  for (int j = 0; j <= n; ++j) {
    long long sign = ((i - j) % 2 == 0) ? 1 : -1;
    sum += sign * c;
    c = c * (i - j) / (j + 1);
  }
  return sum;
}

}  // namespace hj
