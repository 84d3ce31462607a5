#include "hjfilter/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hjfilter/grid.hpp"

namespace hj {

namespace monotone {

MonotoneScheme eikonal_max() {
  return {[](double pm, double pp) { return std::max(pm, -pp); },
          "eikonal_max",
          [](double lambda) { return lambda <= 1.0 + 1e-12; }};
}

MonotoneScheme central_upwind(const Hamiltonian& H) {
  auto eval = H.eval;
  auto deriv = H.deriv;
  auto h = [eval, deriv](double pm, double pp) {
    double dm = deriv(pm), dp = deriv(pp);
    double ap = std::max(std::max(dm, dp), 0.0);
    double am = std::min(std::min(dm, dp), 0.0);
    if (ap - am < 1e-14) return eval(0.5 * (pm + pp));
    return (ap * eval(pm) - am * eval(pp) + ap * am * (pp - pm)) / (ap - am);
  };
  auto hint = H.lipschitz_hint;
  auto cfl = [hint](double lambda) {
    if (!hint) return lambda > 0.0;  // no bound available; accept and let audits catch it
    return lambda * *hint <= 1.0 + 1e-12;
  };
  return {h, "central_upwind(" + H.label + ")", cfl};
}

MonotoneScheme lax_friedrichs(const Hamiltonian& H, double theta) {
  auto eval = H.eval;
  auto h = [eval, theta](double pm, double pp) {
    return eval(0.5 * (pm + pp)) - 0.5 * theta * (pp - pm);
  };
  auto cfl = [theta](double lambda) { return lambda * theta <= 1.0 + 1e-12; };
  return {h, "lax_friedrichs(" + H.label + ")", cfl};
}

}  // namespace monotone

void monotone_step(std::span<const double> u, std::span<double> out, double dx, double dt,
                   const MonotoneScheme& scheme, Exec exec) {
  int n = static_cast<int>(u.size());
  for_each_node(exec, n, [&](int j) {
    out[j] = u[j] - dt * scheme.h(d_minus(u, j, dx), d_plus(u, j, dx));
  });
}

namespace {

// Central finite-difference partials of h at (pm, pp).
struct Partials {
  double dpm, dpp;
};

Partials fd_partials(const MonotoneScheme& s, double pm, double pp) {
  double hm = 1e-6 * std::max(1.0, std::abs(pm));
  double hp = 1e-6 * std::max(1.0, std::abs(pp));
  return {(s.h(pm + hm, pp) - s.h(pm - hm, pp)) / (2.0 * hm),
          (s.h(pm, pp + hp) - s.h(pm, pp - hp)) / (2.0 * hp)};
}

}  // namespace

MonotonicityReport verify_monotone(const MonotoneScheme& scheme, double lambda, double p_lo,
                                   double p_hi, int n_samples, unsigned seed) {
  MonotonicityReport rep;
  std::mt19937_64 rng(seed);

  // Sign conditions and CFL sum over an offset sample box; the fractional
  // offsets keep the probes off the measure-zero kink lines of max/min-based
  // fluxes where one-sided derivatives disagree.
  for (int a = 0; a < n_samples; ++a) {
    for (int b = 0; b < n_samples; ++b) {
      double pm = p_lo + (p_hi - p_lo) * (a + 0.37) / n_samples;
      double pp = p_lo + (p_hi - p_lo) * (b + 0.61) / n_samples;
      auto [dpm, dpp] = fd_partials(scheme, pm, pp);
      rep.sign_minus_violation = std::max(rep.sign_minus_violation, -dpm);
      rep.sign_plus_violation = std::max(rep.sign_plus_violation, dpp);
      rep.cfl_sum_max = std::max(rep.cfl_sum_max, lambda * (dpm - dpp));
    }
  }
  rep.cfl_marginal = std::abs(rep.cfl_sum_max - 1.0) <= 1e-6;

  // Nonexpansivity on random smooth periodic pairs whose one-sided slopes
  // stay inside the sampled box.
  const int n = 128;
  Grid1D grid(0.0, 1.0, n);
  double dx = grid.dx(), dt = lambda * dx;
  double amp = 0.45 * std::min(std::abs(p_lo), std::abs(p_hi));
  std::uniform_real_distribution<double> phase(0.0, 2.0 * 3.14159265358979323846);
  std::vector<double> u(n), v(n), su(n), sv(n);
  for (int trial = 0; trial < 32; ++trial) {
    double a1 = phase(rng), a2 = phase(rng), b1 = phase(rng), b2 = phase(rng);
    for (int j = 0; j < n; ++j) {
      double x = grid.x(j) * 2.0 * 3.14159265358979323846;
      u[j] = amp / (2.0 * 3.14159265358979323846) * (std::sin(x + a1) + 0.5 * std::sin(2.0 * x + a2));
      v[j] = amp / (2.0 * 3.14159265358979323846) * (std::sin(x + b1) + 0.3 * std::sin(3.0 * x + b2));
    }
    monotone_step(u, su, dx, dt, scheme);
    monotone_step(v, sv, dx, dt, scheme);
    double before = 0.0, after = 0.0;
    for (int j = 0; j < n; ++j) {
      before = std::max(before, std::abs(u[j] - v[j]));
      after = std::max(after, std::abs(su[j] - sv[j]));
    }
    rep.nonexpansivity_violation = std::max(rep.nonexpansivity_violation, after - before);
  }
  if (rep.nonexpansivity_violation < 0.0) rep.nonexpansivity_violation = 0.0;
  return rep;
}

}  // namespace hj
