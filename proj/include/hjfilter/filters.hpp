#pragma once

#include <functional>
#include <string>

namespace hj {

// Filter function F used to blend the high-order and monotone updates.
// F(x) = x near 0 (identity region) and F vanishes for large |x|;
// support_bound is the smallest |x| beyond the identity region with
// |F| < 1e-8 everywhere past it.
struct FilterFunction {
  std::function<double(double)> F;
  double support_bound;
  std::string label;
};

namespace filters {

FilterFunction f1();  // x on [-1,1], 0 outside (benchmark default)
// x * exp(-c(|x|-a)^b); defaults reproduce the published parameter choice.
FilterFunction f_exp(double a = 0.25, double b = 20.0, double c = 4.0);
// x * exp(-a/(b-|x|)) for |x| < b, 0 outside.
FilterFunction f_exp_capped(double a = 0.001, double b = 1.05);
FilterFunction f4();  // piecewise-linear hat: x, then +-(2-|x|) ramps, then 0

FilterFunction by_name(const std::string& name);  // "f1".."f4"

}  // namespace filters

}  // namespace hj
