#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hjfilter/hamiltonian.hpp"

namespace hj {

// High-order (non-monotone) numerical hamiltonian h^A evaluated on a window
// of 2*stencil_radius+1 node values centered on the node being updated. The
// update itself is u - dt * apply(window, dx, dt, H).
struct HighOrderScheme {
  int stencil_radius;
  int declared_order;
  std::string label;
  std::function<double(std::span<const double>, double, double, const Hamiltonian&)> apply;
};

namespace highorder {

// Heun (RK2) in time with central differences in space; radius 2.
HighOrderScheme heun_centered();
// One-step Lax-Wendroff form 0.5*[H(D+) + H(D-) - lam*H'((D-+D+)/2)*(H(D+)-H(D-))].
HighOrderScheme lax_wendroff();
// Richtmyer two-step variant H((D-+D+)/2 - (lam/2)*(H(D+)-H(D-))).
HighOrderScheme richtmyer();
// Fourth-order Taylor scheme on the radius-2 window.
HighOrderScheme lax_wendroff_4();

// Lookup by short label: "hc", "lw", "lwr", "lw4".
HighOrderScheme by_name(const std::string& name);

}  // namespace highorder

// Truncation-error probe: one scheme step from exact samples of a smooth
// profile v(t,x), residual |v(t0+dt,x_j) - S^A(v(t0,.))_j| / dt in the max
// norm, repeated over a dx ladder at fixed lambda; slope is the fitted
// consistency order (least squares in log-log).
struct ConsistencyProbe {
  std::vector<double> dx;
  std::vector<double> residual;
  double slope;
};

ConsistencyProbe consistency_probe(const HighOrderScheme& scheme, const Hamiltonian& H,
                                   const std::function<double(double, double)>& v, double t0,
                                   double lambda, std::span<const int> n_ladder, double x_min,
                                   double x_max);

}  // namespace hj
