#include "hjfilter/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace hj::filters {

namespace {

// Smallest x >= start with |F| < 1e-8 from there on; the catalog decays
// monotonically past its bump so a forward march is enough.
double scan_support(const std::function<double(double)>& F, double start) {
  double x = start;
  while (x < 64.0) {
    if (std::abs(F(x)) < 1e-8) return x;
    x += 1e-4;
  }
  return x;
}

}  // namespace

FilterFunction f1() {
  return {[](double x) { return std::abs(x) <= 1.0 ? x : 0.0; }, 1.0, "f1"};
}

FilterFunction f_exp(double a, double b, double c) {
  auto F = [a, b, c](double x) { return x * std::exp(-c * std::pow(std::abs(x) - a, b)); };
  return {F, scan_support(F, std::max(1.0, a)), "f2"};
}

FilterFunction f_exp_capped(double a, double b) {
  auto F = [a, b](double x) {
    double ax = std::abs(x);
    return ax < b ? x * std::exp(-a / (b - ax)) : 0.0;
  };
  return {F, b, "f3"};
}

FilterFunction f4() {
  auto F = [](double x) {
    double ax = std::abs(x);
    if (ax <= 1.0) return x;
    if (ax <= 2.0) return x > 0.0 ? 2.0 - x : -2.0 - x;
    return 0.0;
  };
  return {F, 2.0, "f4"};
}

FilterFunction by_name(const std::string& name) {
  if (name == "f1") return f1();
  if (name == "f2") return f_exp();
  if (name == "f3") return f_exp_capped();
  if (name == "f4") return f4();
  throw std::invalid_argument("unknown filter: " + name);
}

}  // namespace hj::filters
