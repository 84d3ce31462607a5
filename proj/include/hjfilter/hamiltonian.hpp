#pragma once

#include <functional>
#include <optional>
#include <string>

namespace hj {

// A Hamiltonian H(p) with its derivative and, when known for the benchmark
// data, a bound on |H'| used by CFL checks.
struct Hamiltonian {
  std::function<double(double)> eval;
  std::function<double(double)> deriv;
  std::string label;
  std::optional<double> lipschitz_hint;
};

// Legendre conjugate L(q) = sup_p (p q - H(p)), finite on [q_lo, q_hi].
// A degenerate interval (q_lo == q_hi) encodes a point-supported conjugate.
struct Legendre {
  std::function<double(double)> eval;
  double q_lo;
  double q_hi;
  std::string label;
};

namespace hamiltonians {

Hamiltonian transport();                // H(p) = p
Hamiltonian eikonal();                  // H(p) = |p|
Hamiltonian burgers_shift();            // H(p) = (p+1)^2 / 2
Hamiltonian nonconvex_cos();            // H(p) = -cos(p+1)
Hamiltonian quad_shift_2d_component();  // H(p) = (p+1)^2

// Lookup by the names above (as spelled in the experiment registry);
// throws std::invalid_argument for unknown names.
Hamiltonian by_name(const std::string& name);

// Conjugates of the convex catalog entries; throws for nonconvex_cos and
// unknown names.
Legendre legendre(const std::string& name);

}  // namespace hamiltonians

}  // namespace hj
