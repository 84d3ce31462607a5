#include "hjfilter/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hj::hamiltonians {

namespace {
constexpr double kPi = 3.14159265358979323846;

double sign0(double p) { return p > 0.0 ? 1.0 : (p < 0.0 ? -1.0 : 0.0); }
}  // namespace

Hamiltonian transport() {
  return {[](double p) { return p; }, [](double) { return 1.0; }, "transport", 1.0};
}

Hamiltonian eikonal() {
  return {[](double p) { return std::abs(p); }, [](double p) { return sign0(p); }, "eikonal", 1.0};
}

Hamiltonian burgers_shift() {
  // |H'| = |p+1| stays below 2 along the benchmark runs that use this entry.
  return {[](double p) { return 0.5 * (p + 1.0) * (p + 1.0); },
          [](double p) { return p + 1.0; },
          "burgers_shift",
          2.0};
}

Hamiltonian nonconvex_cos() {
  return {[](double p) { return -std::cos(p + 1.0); },
          [](double p) { return std::sin(p + 1.0); },
          "nonconvex_cos",
          1.0};
}

Hamiltonian quad_shift_2d_component() {
  // Initial data keep |p| <= pi/2 per axis, so |H'| = 2|p+1| <= pi + 2.
  return {[](double p) { return (p + 1.0) * (p + 1.0); },
          [](double p) { return 2.0 * (p + 1.0); },
          "quad_shift_2d_component",
          kPi + 2.0};
}

Hamiltonian by_name(const std::string& name) {
  if (name == "transport") return transport();
  if (name == "eikonal") return eikonal();
  if (name == "burgers_shift") return burgers_shift();
  if (name == "nonconvex_cos") return nonconvex_cos();
  if (name == "quad_shift_2d_component") return quad_shift_2d_component();
  throw std::invalid_argument("unknown hamiltonian: " + name);
}

Legendre legendre(const std::string& name) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (name == "transport")  // conjugate of p -> p is supported at q = 1 only
    return {[](double) { return 0.0; }, 1.0, 1.0, "transport*"};
  if (name == "eikonal")  // indicator of [-1, 1]
    return {[](double) { return 0.0; }, -1.0, 1.0, "eikonal*"};
  if (name == "burgers_shift")  // L(q) = q^2/2 - q
    return {[](double q) { return 0.5 * q * q - q; }, -inf, inf, "burgers_shift*"};
  if (name == "quad_shift_2d_component")  // L(q) = q^2/4 - q
    return {[](double q) { return 0.25 * q * q - q; }, -inf, inf, "quad_shift_2d_component*"};
  if (name == "nonconvex_cos")
    throw std::invalid_argument("legendre: nonconvex_cos has no usable convex conjugate");
  throw std::invalid_argument("legendre: unknown hamiltonian: " + name);
}

}  // namespace hj::hamiltonians
