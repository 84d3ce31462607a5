#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hjfilter/grid.hpp"

using namespace hj;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("Grid1D geometry and wrapping") {
  Grid1D g(-2.0, 2.0, 40);
  CHECK(g.dx() == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(g.x(0) == -2.0);
  CHECK(g.x(39) == doctest::Approx(1.9));
  CHECK(g.wrap(40) == 0);
  CHECK(g.wrap(-1) == 39);
  CHECK(g.wrap(-41) == 39);
  CHECK(g.wrap_x(2.0) == doctest::Approx(-2.0));
  CHECK(g.wrap_x(2.3) == doctest::Approx(-1.7));
  CHECK(g.wrap_x(-2.1) == doctest::Approx(1.9));

  CHECK_THROWS_AS(Grid1D(1.0, 1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 4), std::invalid_argument);
}

TEST_CASE("TimeGrid step counts match the benchmark tables") {
  // transport benchmark: T = 0.9, lambda = 0.9, dx = 0.1 -> exactly 10 steps
  TimeGrid a(0.9, 0.9, 4.0 / 40);
  CHECK(a.n_steps == 10);
  CHECK(a.exact_division);
  CHECK(a.step_dt(9) == doctest::Approx(0.09).epsilon(1e-14));

  // nonconvex benchmark: T = 3/(2 pi^2), lambda = 0.31 on [-1,1]
  double T = 1.5 / (kPi * kPi);
  int expect[] = {10, 20, 40, 79};
  int ns[] = {40, 80, 160, 320};
  for (int i = 0; i < 4; ++i) {
    TimeGrid tg(T, 0.31, 2.0 / ns[i]);
    CHECK(tg.n_steps == expect[i]);
  }
}

TEST_CASE("TimeGrid truncated final step lands exactly on T") {
  double T = 1.5 / (kPi * kPi);
  TimeGrid tg(T, 0.31, 2.0 / 40);
  CHECK_FALSE(tg.exact_division);
  double sum = 0.0;
  for (int k = 0; k < tg.n_steps; ++k) {
    CHECK(tg.step_dt(k) > 0.0);
    if (k + 1 < tg.n_steps) CHECK(tg.step_dt(k) == tg.dt);
    sum += tg.step_dt(k);
  }
  CHECK(sum == doctest::Approx(T).epsilon(1e-13));
  CHECK(tg.step_dt(tg.n_steps - 1) < tg.dt);

  CHECK_THROWS_AS(TimeGrid(-1.0, 0.5, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(TimeGrid(1.0, 0.0, 0.1), std::invalid_argument);
}

TEST_CASE("SolverConfig validation") {
  SolverConfig c;
  CHECK_NOTHROW(c.validate());

  SolverConfig bad_k = c;
  bad_k.K = 0.5;
  CHECK_THROWS_AS(bad_k.validate(), std::invalid_argument);

  SolverConfig bad_m = c;
  bad_m.M = 0.5;
  CHECK_THROWS_AS(bad_m.validate(), std::invalid_argument);
  bad_m.M = 0.0;
  CHECK_THROWS_AS(bad_m.validate(), std::invalid_argument);

  SolverConfig bad_s = c;
  bad_s.sigma = -1.0;
  CHECK_THROWS_AS(bad_s.validate(), std::invalid_argument);

  SolverConfig bad_b = c;
  bad_b.B = -3.0;
  CHECK_THROWS_AS(bad_b.validate(), std::invalid_argument);
}

TEST_CASE("difference operators on a quadratic, periodic wrap included") {
  Grid1D g(0.0, 1.0, 10);
  double dx = g.dx();
  std::vector<double> u(g.n);
  for (int j = 0; j < g.n; ++j) u[j] = g.x(j) * g.x(j);

  // interior node: one-sided and central differences of x^2 are exact
  int j = 5;
  double xj = g.x(j);
  CHECK(d_plus(u, j, dx) == doctest::Approx(2 * xj + dx).epsilon(1e-12));
  CHECK(d_minus(u, j, dx) == doctest::Approx(2 * xj - dx).epsilon(1e-12));
  CHECK(d_central(u, j, dx) == doctest::Approx(2 * xj).epsilon(1e-12));
  CHECK(second_difference(u, j, dx) == doctest::Approx(2.0).epsilon(1e-10));

  // wrap: D+ at the last node uses u[0]
  double expect = (u[0] - u[9]) / dx;
  CHECK(d_plus(u, 9, dx) == expect);
  CHECK(d_minus(u, 0, dx) == (u[0] - u[9]) / dx);
}

TEST_CASE("max_abs and lipschitz_estimate") {
  std::vector<double> u = {0.5, -2.25, 1.0, 0.0, 0.25};
  CHECK(max_abs(u) == 2.25);

  // steepest jump is between u[1] and u[2]
  CHECK(lipschitz_estimate(u, 0.5) == doctest::Approx(3.25 / 0.5));

  std::vector<double> c(8, 3.0);
  CHECK(lipschitz_estimate(c, 0.1) == 0.0);
}

TEST_CASE("SolutionState checks value count") {
  Grid1D g(0.0, 1.0, 8);
  CHECK_THROWS_AS(SolutionState(g, std::vector<double>(7)), std::invalid_argument);
  SolutionState s(g, std::vector<double>(8, 1.0), 0.25);
  CHECK(s.t == 0.25);
  CHECK(static_cast<int>(s.u.size()) == 8);
}
