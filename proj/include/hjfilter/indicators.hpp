#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hjfilter/parallel.hpp"

namespace hj {

// Squared scaled second differences over the 5-node window of node j:
//   bm_k = ((u_{j+k}   - 2u_{j+k-1} + u_{j+k-2}) / dx)^2,  k = 0,1
//   bp_k = ((u_{j+k+1} - 2u_{j+k}   + u_{j+k-1}) / dx)^2,  k = 0,1
// so bm1 == bp0 and node j+1's minus-pair reuses node j's plus-pair.
struct BetaQuad {
  double bm0, bm1, bp0, bp1;
};

BetaQuad beta_window(std::span<const double> u, int j, double dx);  // periodic

// Cubic sharpening map: fixes 0, 1/2, 1 and flattens the transition.
inline double map_g(double w) { return 4.0 * w * (0.75 - 1.5 * w + w * w); }

struct OmegaPair {
  double minus, plus;
};

// Normalized weights from the betas: alpha_k = (beta_k + sigma*dx^2)^-2,
// omega- = am1/(am0+am1), omega+ = ap0/(ap0+ap1); optionally mapped by g.
OmegaPair omegas(const BetaQuad& b, double dx, double sigma, bool mapped);

inline double omega_of(const OmegaPair& o) { return o.minus < o.plus ? o.minus : o.plus; }

// Regularity flags: phi = 1 iff min(omega-, omega+) >= M; the tilde variant
// additionally requires |D2 u_j| < B.
struct IndicatorConfig {
  double sigma = 1.0;
  double M = 0.1;
  bool mapped = true;
  bool phi_tilde = false;
  double B = std::numeric_limits<double>::infinity();
};

struct IndicatorState {
  std::vector<double> s;  // per-node ((u_{j+1}-2u_j+u_{j-1})/dx)^2, shared by all windows
  std::vector<double> omega_minus, omega_plus, omega;
  std::vector<std::uint8_t> phi;
  int n_flagged = 0;  // nodes with phi == 0

  void resize(int n);
};

void compute_indicators(std::span<const double> u, double dx, const IndicatorConfig& cfg,
                        IndicatorState& out, Exec exec = Exec::serial);

// Appendix utilities: iterated undivided differences f[0..i] (forward
// difference table) and the alternating binomial partial sum
// sum_{j=0..n} C(i,j)(-1)^(i-j), n <= i.
double undivided_difference(std::span<const double> f, int i);
long long binom_alt_sum(int i, int n);

}  // namespace hj
