#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <random>
#include <vector>

#include "hjfilter/engine.hpp"
#include "hjfilter/experiments.hpp"
#include "hjfilter/parallel.hpp"
#include "test_util.hpp"

using namespace hj;

TEST_CASE("HJFILTER_THREADS caps the worker count") {
  const char* saved = std::getenv("HJFILTER_THREADS");
  std::string restore = saved ? saved : "";

  setenv("HJFILTER_THREADS", "7", 1);
  CHECK(max_threads() == 7);
  setenv("HJFILTER_THREADS", "1", 1);
  CHECK(max_threads() == 1);
  setenv("HJFILTER_THREADS", "0", 1);  // nonsense values fall through
  CHECK(max_threads() >= 1);

  if (saved)
    setenv("HJFILTER_THREADS", restore.c_str(), 1);
  else
    unsetenv("HJFILTER_THREADS");
}

TEST_CASE("for_each_node covers the range in both execution modes") {
  for (Exec e : {Exec::serial, Exec::parallel}) {
    std::vector<int> hits(257, 0);
    for_each_node(e, 257, [&](int j) { hits[j] = j * j; });
    for (int j = 0; j < 257; ++j) CHECK(hits[j] == j * j);
  }
}

TEST_CASE("max_over_nodes equals the sequential maximum") {
  std::mt19937_64 rng(71);
  auto u = testutil::random_periodic(513, rng);
  double expect = *std::max_element(u.begin(), u.end());
  CHECK(max_over_nodes(Exec::serial, 513, [&](int j) { return u[j]; }) == expect);
  CHECK(max_over_nodes(Exec::parallel, 513, [&](int j) { return u[j]; }) == expect);
}

TEST_CASE("epsilon_n is identical under serial and parallel reduction") {
  std::mt19937_64 rng(5);
  auto H = hamiltonians::burgers_shift();
  auto mono = monotone::central_upwind(H);
  for (int trial = 0; trial < 10; ++trial) {
    auto u = testutil::random_periodic(193, rng);
    std::vector<std::uint8_t> region(193, 1);
    double a = epsilon_n(u, 0.02, 0.4, 1.0, mono, H, region, Exec::serial);
    double b = epsilon_n(u, 0.02, 0.4, 1.0, mono, H, region, Exec::parallel);
    CHECK(a == b);
  }
}

TEST_CASE("full runs are bit-identical across execution modes") {
  const Experiment& e = experiment("ex1b");
  Problem1D p = make_problem(e, 200, parse_scheme("AF-HC"));

  RunOptions ser;
  ser.exec = Exec::serial;
  RunOptions par;
  par.exec = Exec::parallel;

  auto a = run(p, ser);
  auto b = run(p, par);
  REQUIRE(a.state.u.size() == b.state.u.size());
  CHECK(std::memcmp(a.state.u.data(), b.state.u.data(), a.state.u.size() * sizeof(double)) == 0);
  for (size_t k = 0; k < a.steps.size(); ++k) {
    CHECK(a.steps[k].eps_n == b.steps[k].eps_n);
    CHECK(a.steps[k].phi == b.steps[k].phi);
    CHECK(a.steps[k].activity == b.steps[k].activity);
  }
}

TEST_CASE("2d runs are bit-identical across execution modes") {
  const Experiment& e = experiment("ex5_shock");
  Problem2D p = make_problem_2d(e, 40, parse_scheme("AF-LWR"));

  RunOptions ser;
  ser.exec = Exec::serial;
  RunOptions par;
  par.exec = Exec::parallel;

  auto a = run_2d(p, ser);
  auto b = run_2d(p, par);
  REQUIRE(a.state.u.size() == b.state.u.size());
  CHECK(std::memcmp(a.state.u.data(), b.state.u.data(), a.state.u.size() * sizeof(double)) == 0);
  for (size_t k = 0; k < a.steps.size(); ++k) {
    CHECK(a.steps[k].eps_x == b.steps[k].eps_x);
    CHECK(a.steps[k].eps_y == b.steps[k].eps_y);
  }
}
